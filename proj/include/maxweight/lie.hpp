#pragma once

#include "maxweight/bigint.hpp"

#include <map>
#include <string>
#include <vector>

namespace maxweight {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

// Finite-type root-system data, built from the Cartan matrix alone.
struct CartanData {
    Family family;
    int rank = 0;
    std::vector<std::vector<int>> cartan;          // a[i][j] = <h_i, alpha_j>, 0-based
    std::vector<int> dsym2;                        // 2 d_i, so the form stays integral
    std::vector<std::vector<int>> positive_roots;  // alpha-coordinate vectors

    static CartanData build(Family family, int rank);

    // <h_i, beta> for beta in alpha coordinates.
    long long pair_coroot(int i, const std::vector<int>& beta) const;
    // 2*(mu | beta) for mu in fundamental coordinates, beta in alpha coordinates.
    long long form2(const std::vector<long long>& mu_fund, const std::vector<int>& beta) const;
};

// Weight in fundamental-weight coordinates.
using WeightVec = std::vector<long long>;

bool is_dominant(const WeightVec& w);

// Multiplicity table of L(lambda) on its dominant weights, keyed by the
// depth vector lambda - mu in alpha coordinates.
struct WeightSystem {
    CartanData cartan;
    WeightVec lambda;
    // depth vector -> (fundamental coords, multiplicity)
    std::map<std::vector<int>, std::pair<WeightVec, BigInt>> dominant;

    BigInt multiplicity(const WeightVec& mu) const; // 0 if mu unreachable
};

WeightSystem freudenthal_table(const CartanData& cartan, const WeightVec& lambda);

// dim L(lambda)_mu by the Freudenthal recursion; mu is replaced by the
// dominant representative of its Weyl orbit first.
BigInt freudenthal(const CartanData& cartan, const WeightVec& lambda, const WeightVec& mu);

// All dominant weights of L(lambda).
std::vector<WeightVec> dominant_weights(const CartanData& cartan, const WeightVec& lambda);

// Product formula dimension, exact.
BigInt weyl_dimension(const CartanData& cartan, const WeightVec& lambda);

// Sum of multiplicities over the whole weight system; must reproduce the
// Weyl dimension.
BigInt dimension_by_multiplicities(const CartanData& cartan, const WeightVec& lambda);

// Dominant representative of the orbit of an arbitrary integral weight.
WeightVec dominantize(const CartanData& cartan, WeightVec w);

// Root-lattice membership of a fundamental-coordinate vector. Fills the
// alpha coordinates on success when coords is non-null.
bool in_root_lattice(const CartanData& cartan, const std::vector<long long>& fund,
                     std::vector<long long>* coords = nullptr);

// omega-tilde conventions for types B and D (0 means the zero weight).
WeightVec tilde_omega_B(int rank, int t);
WeightVec tilde_omega_D(int rank, int t);

} // namespace maxweight
