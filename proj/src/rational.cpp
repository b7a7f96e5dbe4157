#include "tolrec/rational.hpp"

#include <cctype>

#include "tolrec/error.hpp"

namespace tolrec {

Rational parse_rational(const std::string& s) {
    auto bad = [&] { return InvalidArgument("malformed rational '" + s + "'"); };
    if (s.empty()) throw bad();
    std::size_t slash = s.find('/');
    auto digits = [](const std::string& t, bool sign) {
        std::size_t i = (sign && !t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false)) throw bad();
    if (num[0] == '+') num = num.substr(1);
    mpz_class p(num), q(den);
    if (q == 0) throw InvalidArgument("zero denominator in '" + s + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace tolrec
