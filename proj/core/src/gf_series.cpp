#include "catwalk/gf_series.hpp"

#include <stdexcept>

#include "catwalk/closed_forms.hpp"

namespace catwalk {

namespace {

// Dense bivariate polynomial truncated at `degree` in each variable:
// poly[i][j] is the coefficient of x^i y^j.
using BiPoly = std::vector<std::vector<Integer>>;

BiPoly zero_poly(int degree) {
    return BiPoly(degree + 1, std::vector<Integer>(degree + 1));
}

BiPoly truncated_product(const BiPoly& a, const BiPoly& b, int degree) {
    BiPoly out = zero_poly(degree);
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; j <= degree; ++j) {
            if (a[i][j] == 0) continue;
            for (int k = 0; i + k <= degree; ++k)
                for (int l = 0; j + l <= degree; ++l) {
                    if (b[k][l] == 0) continue;
                    out[i + k][j + l] += a[i][j] * b[k][l];
                }
        }
    return out;
}

void add_in_place(BiPoly& a, const BiPoly& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] += b[i][j];
}

// 1 / (1 - E) = sum E^k, valid since E = y - x y^2 has no constant term.
// Every power of E raises the y-degree, so k stops at `degree`.
BiPoly invert_denominator(int degree) {
    BiPoly e = zero_poly(degree);
    if (degree >= 1) e[0][1] = 1;
    if (degree >= 2) e[1][2] = -1;

    BiPoly sum = zero_poly(degree);
    sum[0][0] = 1;
    BiPoly power = sum;  // E^0
    for (int k = 1; k <= degree; ++k) {
        power = truncated_product(power, e, degree);
        add_in_place(sum, power);
    }
    return sum;
}

}  // namespace

GfReport verify_generating_function(const BcTable& table, int degree) {
    if (degree < 0) throw std::invalid_argument("verify_generating_function: degree < 0");
    if (degree > table.n_max())
        throw std::invalid_argument("verify_generating_function: degree exceeds table n_max");

    // Numerator (1 - x y)(Cat(x) - y), Catalan series from the closed form.
    BiPoly cat_minus_y = zero_poly(degree);
    for (int i = 0; i <= degree; ++i) cat_minus_y[i][0] = Integer(catalan(i));
    if (degree >= 1) cat_minus_y[0][1] -= 1;

    BiPoly one_minus_xy = zero_poly(degree);
    one_minus_xy[0][0] = 1;
    if (degree >= 1) one_minus_xy[1][1] = -1;

    BiPoly numerator = truncated_product(one_minus_xy, cat_minus_y, degree);
    BiPoly series = truncated_product(numerator, invert_denominator(degree), degree);

    GfReport report;
    report.degree = degree;
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; j <= degree; ++j) {
            const Natural expected = j <= i ? table.at(i, j) : Natural(0);
            if (series[i][j] != expected)
                report.mismatches.push_back({i, j, series[i][j], expected});
        }
    return report;
}

}  // namespace catwalk
