#include "curveatlas/ampleness.hpp"

namespace curveatlas {

namespace {

const char* kPaperAxioms = R"AXIOMS(
# Positivity axioms for linear systems on blown-up planes P2_s.
# Format: <class> P2_<s> <very_ample|base_point_free|not_very_ample> <citation>
# Classes use the (a; b1^m1, ...) notation for a*l - sum b_i e_i.

# anticanonical del Pezzo embeddings (s <= 6)
(3;1) P2_1 very_ample Kleppe; Hartshorne V.4.13: anticanonical del Pezzo systems
(3;1^2) P2_2 very_ample Kleppe; Hartshorne V.4.13: anticanonical del Pezzo systems
(3;1^3) P2_3 very_ample Kleppe; Hartshorne V.4.13: anticanonical del Pezzo systems
(3;1^4) P2_4 very_ample Kleppe; Hartshorne V.4.13: anticanonical del Pezzo systems
(3;1^5) P2_5 very_ample Kleppe; Hartshorne V.4.13: anticanonical del Pezzo systems
(3;1^6) P2_6 very_ample Kleppe; Hartshorne V.4.13: anticanonical del Pezzo systems

# scroll-side systems on P2_1 (F1 identifications H=(2;1), L=(1;1))
(2;1) P2_1 very_ample hyperplane system of the cubic scroll under F1 = P2_1
(4;3) P2_1 very_ample di Rocco, very-ampleness criterion on general blown-up planes; H+2L on the cubic scroll
(5;2) P2_1 very_ample di Rocco, very-ampleness criterion on general blown-up planes; 3H-L on the cubic scroll
(5;4) P2_1 very_ample di Rocco, very-ampleness criterion on general blown-up planes; residual embedding of the |4H+2L| family, r=10 row

# quartic del Pezzo / Bordiga embeddings
(4;1^5) P2_5 very_ample di Rocco, very-ampleness criterion on general blown-up planes
(4;1^9) P2_9 very_ample di Rocco, very-ampleness criterion on general blown-up planes; Bordiga surface in P5
(4;1^10) P2_10 very_ample di Rocco, very-ampleness criterion on general blown-up planes; Bordiga surface in P4

# quintic-model embeddings (4;2,1^k), k = 0..7
(4;2) P2_1 very_ample di Rocco, very-ampleness criterion on general blown-up planes
(4;2,1) P2_2 very_ample di Rocco, very-ampleness criterion on general blown-up planes
(4;2,1^2) P2_3 very_ample di Rocco, very-ampleness criterion on general blown-up planes
(4;2,1^3) P2_4 very_ample di Rocco, very-ampleness criterion on general blown-up planes
(4;2,1^4) P2_5 very_ample di Rocco, very-ampleness criterion on general blown-up planes
(4;2,1^5) P2_6 very_ample di Rocco, very-ampleness criterion on general blown-up planes
(4;2,1^6) P2_7 very_ample di Rocco, very-ampleness criterion on general blown-up planes
(4;2,1^7) P2_8 very_ample di Rocco, very-ampleness criterion on general blown-up planes

# octic plane models (8;3,2^m,1^b), m+b = s-1, s <= 6
(8;3) P2_1 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,2) P2_2 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,1) P2_2 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,2^2) P2_3 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,2,1) P2_3 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,1^2) P2_3 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,2^3) P2_4 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,2^2,1) P2_4 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,2,1^2) P2_4 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,1^3) P2_4 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,2^4) P2_5 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,2^3,1) P2_5 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,2^2,1^2) P2_5 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,2,1^3) P2_5 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,1^4) P2_5 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,2^5) P2_6 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,2^4,1) P2_6 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,2^3,1^2) P2_6 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,2^2,1^3) P2_6 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,2,1^4) P2_6 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model
(8;3,1^5) P2_6 very_ample di Rocco, very-ampleness criterion on general blown-up planes; octic model

# nonic plane models (9;4,2^m,1^g), m+g = s-1, s <= 5
(9;4) P2_1 very_ample di Rocco, very-ampleness criterion on general blown-up planes; nonic model
(9;4,2) P2_2 very_ample di Rocco, very-ampleness criterion on general blown-up planes; nonic model
(9;4,1) P2_2 very_ample di Rocco, very-ampleness criterion on general blown-up planes; nonic model
(9;4,2^2) P2_3 very_ample di Rocco, very-ampleness criterion on general blown-up planes; nonic model
(9;4,2,1) P2_3 very_ample di Rocco, very-ampleness criterion on general blown-up planes; nonic model
(9;4,1^2) P2_3 very_ample di Rocco, very-ampleness criterion on general blown-up planes; nonic model
(9;4,2^3) P2_4 very_ample di Rocco, very-ampleness criterion on general blown-up planes; nonic model
(9;4,2^2,1) P2_4 very_ample di Rocco, very-ampleness criterion on general blown-up planes; nonic model
(9;4,2,1^2) P2_4 very_ample di Rocco, very-ampleness criterion on general blown-up planes; nonic model
(9;4,1^3) P2_4 very_ample di Rocco, very-ampleness criterion on general blown-up planes; nonic model
(9;4,2^4) P2_5 very_ample di Rocco, very-ampleness criterion on general blown-up planes; nonic model
(9;4,2^3,1) P2_5 very_ample di Rocco, very-ampleness criterion on general blown-up planes; nonic model
(9;4,2^2,1^2) P2_5 very_ample di Rocco, very-ampleness criterion on general blown-up planes; nonic model
(9;4,2,1^3) P2_5 very_ample di Rocco, very-ampleness criterion on general blown-up planes; nonic model
(9;4,1^4) P2_5 very_ample di Rocco, very-ampleness criterion on general blown-up planes; nonic model

# sporadic very ample systems
(10;6,2^2,1^3) P2_6 very_ample di Rocco, very-ampleness criterion on general blown-up planes
(10;4,3^4) P2_5 very_ample di Rocco, very-ampleness criterion on general blown-up planes
(11;4^4,3) P2_5 very_ample di Rocco, very-ampleness criterion on general blown-up planes
(10;3^5) P2_5 very_ample di Rocco, very-ampleness criterion on general blown-up planes
(11;4^3,3^2) P2_5 very_ample di Rocco, very-ampleness criterion on general blown-up planes
(12;5,4^4) P2_5 very_ample di Rocco, very-ampleness criterion on general blown-up planes

# quintic residual systems (5;3,1^k)
(5;3) P2_1 very_ample di Rocco, very-ampleness criterion on general blown-up planes
(5;3,1) P2_2 very_ample di Rocco, very-ampleness criterion on general blown-up planes
(5;3,1^2) P2_3 very_ample di Rocco, very-ampleness criterion on general blown-up planes
(5;3,1^3) P2_4 very_ample di Rocco, very-ampleness criterion on general blown-up planes
(5;3,1^4) P2_5 very_ample di Rocco, very-ampleness criterion on general blown-up planes

# base-point-free systems used by the decompositions
(5;2,1) P2_2 base_point_free di Rocco, very-ampleness criterion on general blown-up planes
(5;2,1^2) P2_3 base_point_free di Rocco, very-ampleness criterion on general blown-up planes
(5;2,1^3) P2_4 base_point_free di Rocco, very-ampleness criterion on general blown-up planes
(5;2,1^4) P2_5 base_point_free di Rocco, very-ampleness criterion on general blown-up planes
(5;2,1^5) P2_6 base_point_free di Rocco, very-ampleness criterion on general blown-up planes
(5;2,1^6) P2_7 base_point_free di Rocco, very-ampleness criterion on general blown-up planes
(5;2,1^7) P2_8 base_point_free di Rocco, very-ampleness criterion on general blown-up planes
(5;2,1^8) P2_9 base_point_free di Rocco, very-ampleness criterion on general blown-up planes
(3;1^7) P2_7 base_point_free di Rocco, very-ampleness criterion on general blown-up planes
(3;1^8) P2_8 base_point_free di Rocco, very-ampleness criterion on general blown-up planes
(5;3,2,1^3) P2_5 base_point_free di Rocco, very-ampleness criterion on general blown-up planes
(5;3,2,1^4) P2_6 base_point_free di Rocco, very-ampleness criterion on general blown-up planes
(5;3,2,1^5) P2_7 base_point_free di Rocco, very-ampleness criterion on general blown-up planes
(5;3,2,1^6) P2_8 base_point_free di Rocco, very-ampleness criterion on general blown-up planes
(3;2,1^4) P2_5 base_point_free di Rocco, very-ampleness criterion on general blown-up planes
(6;4,2^3,1) P2_5 base_point_free di Rocco, very-ampleness criterion on general blown-up planes
(6;4,2^3,1^2) P2_6 base_point_free di Rocco, very-ampleness criterion on general blown-up planes
(6;4,2^3,1^3) P2_7 base_point_free di Rocco, very-ampleness criterion on general blown-up planes
(6;4,2^3,1^4) P2_8 base_point_free di Rocco, very-ampleness criterion on general blown-up planes
(4;3,1^4) P2_5 base_point_free di Rocco, very-ampleness criterion on general blown-up planes

# recorded non-very-ample systems (obstruction citations)
(4;3,1) P2_2 not_very_ample contracted (-1)-curve l-e1-e2 meets the member twice
(4;3,1^2) P2_3 not_very_ample contracted (-1)-curve l-e1-e2 meets the member twice
(4;3,1^3) P2_4 not_very_ample contracted (-1)-curve l-e1-e2 meets the member twice
(4;3,1^4) P2_5 not_very_ample contracted (-1)-curve l-e1-e2 meets the member twice
(4;3,1^5) P2_6 not_very_ample contracted (-1)-curve l-e1-e2 meets the member twice
(3;0) P2_1 not_very_ample b_s = 0 violates the very-ampleness threshold b_s >= 1
(3;1,0) P2_2 not_very_ample b_s = 0 violates the very-ampleness threshold b_s >= 1
(5;4,1) P2_2 not_very_ample di Rocco, very-ampleness criterion on general blown-up planes; fails for s >= 2
(5;4,1^2) P2_3 not_very_ample di Rocco, very-ampleness criterion on general blown-up planes; fails for s >= 2
)AXIOMS";

}  // namespace

const AxiomTable& AxiomTable::paper_defaults() {
  static const AxiomTable table = AxiomTable::parse(kPaperAxioms);
  return table;
}

}  // namespace curveatlas
