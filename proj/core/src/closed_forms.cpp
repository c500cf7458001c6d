#include "catwalk/closed_forms.hpp"

#include <stdexcept>
#include <string>

namespace catwalk {

Natural binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Natural result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

Natural catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: n must be >= 0");
    Natural numerator = binomial(2 * n, n);
    const Natural d = n + 1;
    if (numerator % d != 0)
        throw std::logic_error("catalan: binom(2n, n) not divisible by n + 1");
    return numerator / d;
}

Natural ballot(int i, int j) {
    if (i < 0) throw std::invalid_argument("ballot: i must be >= 0");
    if (j < -1)
        throw std::invalid_argument("ballot: j must be >= -1, got " + std::to_string(j));
    if (j > i)
        throw std::invalid_argument("ballot: j must be <= i, got j = " + std::to_string(j) +
                                    " with i = " + std::to_string(i));
    if (j == -1) return 0;

    Natural numerator = Natural(i + 1 - j) * binomial(i + 1 + j, j);
    const Natural d = i + 1 + j;
    if (numerator % d != 0)
        throw std::logic_error("ballot: closed form not exactly divisible at i = " +
                               std::to_string(i) + ", j = " + std::to_string(j));
    return numerator / d;
}

}  // namespace catwalk
