#ifndef SPINWEIL_WEIL_HPP
#define SPINWEIL_WEIL_HPP

#include <spinweil/purespinor.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace spinweil {

using FCoeff = std::array<Rational, 2>;  // a + b sqrt p

struct WeilDatum {
    std::string name;
    TowerSpec tower;
    int n = 0;
    RMat eta_hat;                                // 2n x 2n, column j is the image of x_{j+1}
    std::vector<std::vector<FCoeff>> theta;      // d x d alternating, on the F-basis of H^1(X)
};

std::vector<std::string> preset_names();
// Throws std::out_of_range for unknown names.
WeilDatum preset_datum(const std::string& name);

struct WeilStructure {
    WeilDatum datum;
    const Tower* tower = nullptr;
    const HyperbolicSpace* h = nullptr;
    int n = 0, e = 0, d = 0;

    std::vector<std::vector<Rational>> f_basis;  // u_1..u_d in coordinates of x_1..x_{2n}
    RMV theta;                                   // trace-embedded class in wedge^2 H^1(X)
    RMat theta_sharp;                            // y_k -> y_k contracted into theta, x-coordinates

    RMV alpha, beta;
    KMV spinor;                                  // exp(sqrt(-q) theta) = alpha + sqrt(-q) beta

    std::vector<std::vector<FieldElem>> W;       // (-sqrt(-q) theta#(y_k), y_k)
    RMat eta_p, eta_q;                           // eta of sqrt p and of sqrt -q on V

    std::vector<Embedding> characters;           // embeddings of K
    std::vector<KSub> V_sigma;                   // joint eigenspaces, same order
    std::vector<CMType> types;
    std::vector<KSub> WT;                        // same order as types
    std::vector<KMV> ell;                        // pure spinor of each W_T

    std::vector<RMV> B;                          // rational basis of the secant space
    std::vector<FieldElem> k_minus;              // Q-basis of K_-
    std::vector<RMat> xi_matrix;                 // Xi_t(e_a, e_b)
    std::vector<RMV> A2;                         // Xi_t as bivectors
    std::vector<RMV> HW;
    std::vector<RMV> gB;

    RMat eta(const FieldElem& t) const;
    FieldElem pair_F(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
};

// Each stage fills part of the structure; build_weil runs them all.
void build_spinor(WeilStructure& ws);
void build_W(WeilStructure& ws);
void build_eta(WeilStructure& ws);
void build_WT(WeilStructure& ws);
void build_B(WeilStructure& ws);
void build_forms(WeilStructure& ws);
void build_HW(WeilStructure& ws);
void lie_gB(WeilStructure& ws);
WeilStructure build_weil(const WeilDatum& datum);

struct DatumError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// eta of sqrt(-q) through V_K = W + iota(W), against the closed form.
RMat eta_q_by_decomposition(const WeilStructure& ws);

RMat xi_form(const WeilStructure& ws, const FieldElem& t);
RMV form_to_bivector(const HyperbolicSpace& h, const RMat& form);
FieldElem hermitian_form(const WeilStructure& ws, const FieldElem& t, const std::vector<Rational>& x,
                         const std::vector<Rational>& y);
// Theta(theta, theta') := theta'(theta contracted into Theta), on y-generators.
Rational theta_on_y(const WeilStructure& ws, int j, int k);

struct SplitWitness {
    bool found = false;
    std::vector<int> y_indices;                  // 0-based y generators spanning the F-lines
    std::vector<std::vector<Rational>> z_basis;  // rational basis of Z
    std::size_t k_dim = 0;
};
SplitWitness split_check(const WeilStructure& ws, const FieldElem& t);

struct InvariantDegree {
    int k = 0;
    std::size_t wedge_dim = 0;
    std::size_t generated_dim = 0;
    std::size_t invariant_dim = 0;       // upper bound from the modular rank; exact when certified
    bool generators_invariant = false;   // every generated element killed exactly
    bool certified_equal = false;
    bool reconstructed = false;          // invariant space also recovered exactly and compared
    std::size_t rows_used = 0;
    std::vector<RMV> generated;
};
InvariantDegree invariants_and_generation(const WeilStructure& ws, int k);

// Degree-k part of the algebra generated by A2 and HW.
std::vector<RMV> generated_degree(const WeilStructure& ws, int k);

// Dense coordinates of the degree-k part in the ordered basis of k-subsets.
std::vector<Mask> degree_masks(int arity, int k);

}  // namespace spinweil

#endif
