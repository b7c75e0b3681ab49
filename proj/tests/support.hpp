#ifndef CCALG_TESTS_SUPPORT_HPP
#define CCALG_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "ccalg/duality.hpp"
#include "ccalg/groebner.hpp"

namespace ts {

inline ccalg::RingPtr ringQ(const std::vector<std::string>& vars) {
    return ccalg::Ring::make(ccalg::Field::rationals(), vars);
}

inline ccalg::RingPtr ringFp(const std::vector<std::string>& vars, std::uint32_t q = 32003) {
    return ccalg::Ring::make(ccalg::Field::prime_field(q), vars);
}

inline ccalg::Polynomial P(const ccalg::RingPtr& r, const std::string& text) {
    return ccalg::parse_polynomial(r, text);
}

inline ccalg::Submodule ideal(const ccalg::RingPtr& r, const std::vector<std::string>& gens) {
    std::vector<ccalg::Polynomial> ps;
    for (const auto& g : gens) ps.push_back(P(r, g));
    return ccalg::Submodule::ideal(r, ps);
}

inline ccalg::RingVector vec(const ccalg::RingPtr& r, const std::vector<std::string>& comps) {
    std::vector<ccalg::Polynomial> ps;
    for (const auto& c : comps) ps.push_back(P(r, c));
    return ccalg::RingVector(r, ps);
}

// columns given as string vectors
inline ccalg::Submodule submodule(const ccalg::RingPtr& r, int rank,
                                  const std::vector<std::vector<std::string>>& cols) {
    std::vector<ccalg::RingVector> vs;
    for (const auto& c : cols) vs.push_back(vec(r, c));
    return ccalg::Submodule::from_columns(r, rank, vs);
}

inline ccalg::RingMatrix matrix(const ccalg::RingPtr& r, const std::vector<std::vector<std::string>>& rows) {
    int nr = static_cast<int>(rows.size());
    int nc = nr ? static_cast<int>(rows[0].size()) : 0;
    ccalg::RingMatrix m(r, nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) m.at(i, j) = P(r, rows[i][j]);
    return m;
}

inline ccalg::CompleteIntersection ci(const ccalg::RingPtr& r, const std::vector<std::string>& gens) {
    std::vector<ccalg::Polynomial> ps;
    for (const auto& g : gens) ps.push_back(P(r, g));
    return ccalg::make_complete_intersection(ps);
}

}  // namespace ts

#endif
