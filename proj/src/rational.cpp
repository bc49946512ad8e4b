#include "hgc/rational.hpp"

#include "hgc/errors.hpp"

namespace hgc {

std::string formatRational(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parseRational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer p(text.substr(0, slash));
        Integer q(text.substr(slash + 1));
        if (q == 0) throw DomainError("rational: zero denominator");
        return Rational(p, q);
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception&) {
        throw DomainError("rational: cannot parse '" + text + "'");
    }
}

}  // namespace hgc
