#include "degbern/lambda_poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>

#include "degbern/errors.hpp"

namespace degbern {

LambdaPoly::LambdaPoly(const Rational& c) {
    if (!c.is_zero()) {
        coeffs_.push_back(c);
    }
}

LambdaPoly::LambdaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

LambdaPoly LambdaPoly::lambda() { return LambdaPoly(std::vector<Rational>{0, 1}); }

void LambdaPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational LambdaPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational LambdaPoly::evaluate(const Rational& at) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return LambdaPoly(std::move(out));
}

LambdaPoly& LambdaPoly::operator*=(const LambdaPoly& rhs) { return *this = *this * rhs; }

LambdaPoly operator-(const LambdaPoly& a) {
    LambdaPoly r = a;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

LambdaPoly exact_divide(const LambdaPoly& a, const LambdaPoly& b) {
    if (b.is_zero()) {
        throw zero_denominator();
    }
    if (a.is_zero()) {
        return {};
    }
    if (a.degree() < b.degree()) {
        throw not_divisible("degbern: " + b.to_string() + " does not divide " + a.to_string());
    }
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quot(rem.size() - b.coeffs_.size() + 1);
    const Rational& lead = b.coeffs_.back();
    for (std::size_t i = quot.size(); i-- > 0;) {
        const Rational q = rem[i + b.coeffs_.size() - 1] / lead;
        quot[i] = q;
        if (q.is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            rem[i + j] -= q * b.coeffs_[j];
        }
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Rational& r) { return !r.is_zero(); })) {
        throw not_divisible("degbern: " + b.to_string() + " does not divide " + a.to_string());
    }
    return LambdaPoly(std::move(quot));
}

std::string LambdaPoly::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        const Rational magnitude = negative ? -c : c;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (i == 0) {
            out += magnitude.to_string();
            continue;
        }
        if (magnitude != Rational(1)) {
            out += magnitude.to_string();
            out += '*';
        }
        out += 'L';
        if (i > 1) {
            out += '^';
            out += std::to_string(i);
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : original_(text) {
        for (const char c : text) {
            if (std::isspace(static_cast<unsigned char>(c)) == 0) {
                s_ += c;
            }
        }
    }

    LambdaPoly parse() {
        if (s_.empty()) {
            fail();
        }
        std::map<std::size_t, Rational> terms;
        bool first = true;
        while (pos_ < s_.size()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = s_[pos_++] == '-';
            } else if (!first) {
                fail();
            }
            first = false;
            auto [coeff, power] = term();
            terms[power] += negative ? -coeff : coeff;
        }
        std::vector<Rational> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1);
        for (const auto& [power, c] : terms) {
            coeffs[power] = c;
        }
        return LambdaPoly(std::move(coeffs));
    }

private:
    [[nodiscard]] char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    [[noreturn]] void fail() const {
        throw parse_error("degbern: not a lambda polynomial: '" + std::string(original_) + "'");
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            ++pos_;
        }
        if (start == pos_) {
            fail();
        }
        return s_.substr(start, pos_ - start);
    }

    std::pair<Rational, std::size_t> term() {
        Rational coeff(1);
        if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            std::string lit = digits();
            if (peek() == '/') {
                ++pos_;
                lit += '/';
                lit += digits();
            }
            coeff = Rational::parse(lit);
            if (peek() != '*') {
                return {coeff, 0};
            }
            ++pos_;
        }
        if (peek() != 'L') {
            fail();
        }
        ++pos_;
        std::size_t power = 1;
        if (peek() == '^') {
            ++pos_;
            power = std::stoul(digits());
        }
        return {coeff, power};
    }

    std::string_view original_;
    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace

LambdaPoly LambdaPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const LambdaPoly& p) { return os << p.to_string(); }

LambdaPoly lambda_product(unsigned n) {
    if (n == 0) {
        throw std::domain_error("degbern: lambda_product is defined for n >= 1");
    }
    LambdaPoly acc(1);
    const LambdaPoly lambda = LambdaPoly::lambda();
    for (unsigned j = 1; j < n; ++j) {
        acc *= lambda - LambdaPoly(static_cast<long>(j));
    }
    return acc;
}

} // namespace degbern
