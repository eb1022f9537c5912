#include "wfk/params.hpp"

#include <cmath>
#include <sstream>

namespace wfk {

WeierstrassParams WeierstrassParams::make(double a, int b) {
    std::ostringstream bad;
    const char* sep = "";
    if (!(a > 0.0) || !(a < 1.0)) {
        bad << sep << "0 < a < 1 required (got a = " << a << ")";
        sep = "; ";
    } else if (a > kMaxAmplitudeRatio) {
        bad << sep << "a <= " << kMaxAmplitudeRatio
            << " required to keep truncation orders bounded (got a = " << a << ")";
        sep = "; ";
    }
    if (b < 2) {
        bad << sep << "b >= 2 required (got b = " << b << ")";
        sep = "; ";
    }
    if (a > 0.0 && a < 1.0 && a * static_cast<double>(b) < 1.0) {
        bad << sep << "a*b >= 1 required (got a*b = " << a * b << ")";
        sep = "; ";
    }
    if (*sep != '\0') {
        throw DomainError("invalid parameters: " + bad.str());
    }
    return WeierstrassParams(a, b);
}

WeierstrassParams make_params(double a, int b) { return WeierstrassParams::make(a, b); }

TruncationPlan truncation_order(const WeierstrassParams& params, double tol) {
    if (!(tol > 0.0)) {
        throw DomainError("truncation tolerance must be > 0");
    }
    const double a = params.a();
    const double scale = 1.0 - a;
    // Log-domain first guess (tol*scale may underflow for denormal tol),
    // then fix up so the returned order is the exact minimum under
    // floating-point evaluation of a^N/(1-a).
    int n = static_cast<int>(std::ceil((std::log(tol) + std::log(scale)) / std::log(a)));
    if (n < 1) n = 1;
    auto tail = [&](int order) { return std::pow(a, order) / scale; };
    while (n > 1 && tail(n - 1) <= tol) --n;
    while (tail(n) > tol) ++n;
    return TruncationPlan{n, tail(n)};
}

} // namespace wfk
