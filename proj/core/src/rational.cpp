#include "mdet/rational.hpp"

#include "mdet/errors.hpp"

#include <cctype>
#include <sstream>

namespace mdet {

namespace {

Int parse_int_strict(const std::string& s, const std::string& context) {
    if (s.empty()) throw ParseError("empty integer in " + context);
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    if (i == s.size()) throw ParseError("sign without digits in " + context);
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("invalid character '" + std::string(1, s[i]) + "' in " + context);
    }
    return Int(s);
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
        throw ParseError("decimal notation not accepted, use p/q: '" + text + "'");
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rat(parse_int_strict(s, "'" + text + "'"));
    }
    if (s.find('/', slash + 1) != std::string::npos)
        throw ParseError("multiple '/' in rational '" + text + "'");
    Int num = parse_int_strict(s.substr(0, slash), "numerator of '" + text + "'");
    Int den = parse_int_strict(s.substr(slash + 1), "denominator of '" + text + "'");
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rat(num) / Rat(den);  // division canonicalizes
}

std::string to_string(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string to_string(const Int& z) {
    std::ostringstream os;
    os << z;
    return os.str();
}

bool is_integer(const Rat& q) { return denominator(q) == 1; }

Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

Int floor_rat(const Rat& q) {
    Int n = numerator(q), d = denominator(q);
    Int quo = n / d;
    if (n % d != 0 && n < 0) --quo;
    return quo;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

Int int_pow(const Int& base, unsigned e) {
    Int r = 1, b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

std::vector<Rat> parse_rational_list(const std::string& csv) {
    std::vector<Rat> out;
    std::string cur;
    std::istringstream is(csv);
    while (std::getline(is, cur, ',')) out.push_back(parse_rational(cur));
    return out;
}

}  // namespace mdet
