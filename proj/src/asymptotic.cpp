#include "qwalk/closedforms.hpp"

#include <cmath>
#include <numbers>

namespace qwalk {

Integer class8_a(int n) {
    if (n < 1) throw std::invalid_argument("class8_a: n must be positive");
    Rat s = 0;
    for (int k = 1; k <= n + 1; ++k)
        if ((n + k) % 2 == 1) s += ratio(binomial(n + 1, (n + k + 1) / 2) * k, n + 1);
    s *= catalan(n - 1);
    s.canonicalize();
    if (s.get_den() != 1) throw std::logic_error("class8_a: non-integral value");
    return s.get_num();
}

AsymptoticReport transcendence_asymptotic(int n_max) {
    if (n_max < 50) throw std::invalid_argument("transcendence_asymptotic: n_max must be at least 50");
    AsymptoticReport rep;
    for (int n = 50; n <= n_max; n *= 2) rep.n.push_back(n);
    rep.all_positive = true;
    for (int n : rep.n) {
        Integer a = class8_a(n);
        rep.all_positive = rep.all_positive && sgn(a) > 0;
        Integer pow8;
        mpz_ui_pow_ui(pow8.get_mpz_t(), 8, static_cast<unsigned long>(n));
        Rat q(a * 4 * n * n, pow8);
        q.canonicalize();
        rep.r.push_back(q.get_d() * std::numbers::pi / std::numbers::sqrt2);
    }
    rep.monotone = true;
    for (std::size_t i = 1; i < rep.r.size(); ++i)
        rep.monotone = rep.monotone && std::abs(rep.r[i] - 1) < std::abs(rep.r[i - 1] - 1);
    std::size_t m = rep.r.size();
    rep.richardson = m >= 2 ? 2 * rep.r[m - 1] - rep.r[m - 2] : rep.r.back();
    return rep;
}

}  // namespace qwalk
