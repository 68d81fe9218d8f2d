#include "termcut/rational.hpp"

#include <cctype>

#include "termcut/error.hpp"

namespace termcut {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::size_t start = 0;
    bool negative = false;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        negative = text[0] == '-';
        start = 1;
    }
    std::size_t slash = text.find('/', start);
    mpz_class num, den;
    if (slash == std::string::npos) {
        if (!all_digits(text, start, text.size()))
            throw InvalidInput("not a rational: '" + text + "'");
        num = mpz_class(text.substr(start));
        den = 1;
    } else {
        if (!all_digits(text, start, slash) || !all_digits(text, slash + 1, text.size()))
            throw InvalidInput("not a rational: '" + text + "'");
        num = mpz_class(text.substr(start, slash - start));
        den = mpz_class(text.substr(slash + 1));
        if (den == 0) throw InvalidInput("zero denominator: '" + text + "'");
    }
    if (negative) num = -num;
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_positive_rational(const std::string& text) {
    Rat r = parse_rational(text);
    if (r <= 0) throw InvalidInput("value must be positive: '" + text + "'");
    return r;
}

Rat parse_nonnegative_rational(const std::string& text) {
    Rat r = parse_rational(text);
    if (r < 0) throw InvalidInput("value must be nonnegative: '" + text + "'");
    return r;
}

std::string rat_str(const Rat& value) { return value.get_str(); }

double rat_approx(const Rat& value) { return value.get_d(); }

}  // namespace termcut
