#include "adw/scalar.hpp"

#include <cctype>

#include "adw/errors.hpp"

namespace adw {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Scalar::Scalar(long num, long den) {
    if (den == 0) throw InputError("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
        throw InputError("malformed rational '" + std::string(text) + "'");
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0)
        throw InputError("malformed rational '" + std::string(text) + "'");
    if (sgn(q.get_den()) == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return Scalar(std::move(q));
}

std::string Scalar::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_str();
}

bool Scalar::is_integer() const { return q_.get_den() == 1; }

std::string Scalar::numerator() const { return q_.get_num().get_str(); }
std::string Scalar::denominator() const { return q_.get_den().get_str(); }

std::uint32_t Scalar::mod(std::uint32_t p) const {
    mpz_class P(p);
    mpz_class den = q_.get_den() % P;
    if (den == 0) throw InputError("denominator of " + str() + " vanishes modulo " + std::to_string(p));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
    mpz_class r = (q_.get_num() * inv) % P;
    if (r < 0) r += P;
    return static_cast<std::uint32_t>(r.get_ui());
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw InputError("division by zero");
    q_ /= o.q_;
    return *this;
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-q_)); }

}  // namespace adw
