#include "geotype/refinement.hpp"

#include <stdexcept>
#include <string>

namespace geotype {

long long lex_index(const GeometricType& t, const HLabel& lbl) {
    if (lbl.i < 1 || lbl.i > t.n || lbl.j < 1 || lbl.j > t.h(lbl.i)) {
        throw std::invalid_argument("horizontal label (" + std::to_string(lbl.i) + "," +
                                    std::to_string(lbl.j) + ") is out of range");
    }
    long long r = lbl.j;
    for (int i = 1; i < lbl.i; ++i) r += t.h(i);
    return r;
}

GeometricType binary_refinement(const GeometricType& t) {
    require_valid(t);
    const long long a = alpha(t);

    GeometricType out;
    out.n = static_cast<int>(a);
    out.hv.resize(static_cast<size_t>(a));

    // Counts first: the row of rank r(i,j) has h_k horizontal and v_i
    // vertical subrectangles, where rho(i,j) = (k,l).
    for (int i = 1; i <= t.n; ++i) {
        for (int j = 1; j <= t.h(i); ++j) {
            const VLabel target = t.rho_at({i, j});
            const size_t row = static_cast<size_t>(lex_index(t, {i, j})) - 1;
            out.hv[row] = {t.h(target.k), t.v(i)};
        }
    }

    long long refined_alpha = 0;
    for (const auto& [h, v] : out.hv) refined_alpha += h;
    out.rho.resize(static_cast<size_t>(refined_alpha));
    out.eps.resize(static_cast<size_t>(refined_alpha));
    for (int i = 1; i <= t.n; ++i) {
        for (int j = 1; j <= t.h(i); ++j) {
            const VLabel target = t.rho_at({i, j});
            const int sign = t.eps_at({i, j});
            const int k = target.k;
            const int l = target.l;
            const int row = static_cast<int>(lex_index(t, {i, j}));
            for (int j0 = 1; j0 <= t.h(k); ++j0) {
                const int image_j = sign == 1 ? j0 : t.h(k) - (j0 - 1);
                const int image_row = static_cast<int>(lex_index(t, {k, image_j}));
                const size_t ord = out.h_ordinal({row, j0});
                out.rho[ord] = {image_row, l};
                out.eps[ord] = sign;
            }
        }
    }
    return out;
}

std::pair<GeometricType, bool> refine_if_needed(const GeometricType& t) {
    require_valid(t);
    if (is_binary(incidence_matrix(t))) return {t, false};
    return {binary_refinement(t), true};
}

}  // namespace geotype
