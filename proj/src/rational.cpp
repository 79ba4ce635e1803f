#include "wreathlab/rational.hpp"

#include <cctype>

#include "wreathlab/errors.hpp"

namespace wreathlab {

std::string to_fraction_string(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw invalid_input("empty rational literal");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        Rational q;
        if (q.set_str(text, 10) != 0) throw invalid_input("bad rational literal: " + text);
        if (q.get_den() == 0) throw invalid_input("zero denominator: " + text);
        q.canonicalize();
        return q;
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string head = text.substr(0, dot);
        const std::string tail = text.substr(dot + 1);
        if (tail.empty()) return parse_rational(head.empty() ? "0" : head);
        for (char ch : tail)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw invalid_input("bad decimal literal: " + text);
        bool negative = !head.empty() && head[0] == '-';
        std::string ipart = head;
        if (!ipart.empty() && (ipart[0] == '-' || ipart[0] == '+')) ipart = ipart.substr(1);
        if (ipart.empty()) ipart = "0";
        Integer num(ipart + tail, 10);
        Integer den = pow10(tail.size());
        Rational q(num, den);
        q.canonicalize();
        if (negative) q = -q;
        return q;
    }
    Rational q;
    if (q.set_str(text, 10) != 0) throw invalid_input("bad integer literal: " + text);
    q.canonicalize();
    return q;
}

std::string to_decimal_string(const Rational& q, int digits, Rounding mode) {
    if (digits < 0) throw invalid_input("negative digit count");
    Integer scale = pow10(static_cast<unsigned long>(digits));
    // scaled = q * 10^digits, rounded per mode.
    Integer num = q.get_num() * scale;
    const Integer& den = q.get_den();
    Integer t, rem;
    switch (mode) {
        case Rounding::Down: mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t()); break;
        case Rounding::Up:   mpz_cdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t()); break;
        case Rounding::Nearest: {
            mpz_fdiv_qr(t.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (2 * rem >= den) t += 1;
            break;
        }
    }
    bool negative = t < 0;
    Integer mag = abs(t);
    std::string s = mag.get_str();
    std::string out;
    if (digits == 0) {
        out = s;
    } else {
        if (s.size() <= static_cast<size_t>(digits))
            s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
        out = s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
    }
    if (negative && mag != 0) out.insert(0, "-");
    return out;
}

Rational rational_pow(const Rational& base, unsigned long exp) {
    Rational out;
    mpz_pow_ui(out.get_num().get_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(out.get_den().get_mpz_t(), base.get_den().get_mpz_t(), exp);
    out.canonicalize();
    return out;
}

Integer parse_magnitude(const std::string& text) {
    auto parse_int = [](const std::string& s) {
        if (s.empty()) throw invalid_input("empty magnitude");
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw invalid_input("bad magnitude: " + s);
        return Integer(s, 10);
    };
    auto epos = text.find_first_of("eE");
    if (epos != std::string::npos) {
        Integer mant = parse_int(text.substr(0, epos));
        Integer out;
        mpz_ui_pow_ui(out.get_mpz_t(), 10,
                      mpz_get_ui(parse_int(text.substr(epos + 1)).get_mpz_t()));
        return mant * out;
    }
    auto cpos = text.find('^');
    if (cpos != std::string::npos) {
        Integer base = parse_int(text.substr(0, cpos));
        Integer out;
        mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(),
                   mpz_get_ui(parse_int(text.substr(cpos + 1)).get_mpz_t()));
        return out;
    }
    return parse_int(text);
}

Integer pow10(unsigned long k) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, k);
    return out;
}

} // namespace wreathlab
