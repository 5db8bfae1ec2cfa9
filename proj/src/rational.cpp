#include "dpdelta/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dpd {

namespace {

bool is_int_literal(const std::string& s) {
    size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_int_literal(num) || !is_int_literal(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("not a rational literal: '" + s + "'");
    if (num[0] == '+') num = num.substr(1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace dpd
