#pragma once

#include "diracspec/rootsys.hpp"
#include "diracspec/sympair.hpp"

namespace diracspec {

// Classical equal-rank pairs in the ambient coordinates of build_classical.
// Each fills PairMeta with the standard name ("AIII:p,q", ...) and the
// Hermitian / spin data known from the classification.

// U(p+q)/U(p)xU(q)
SymmetricPair aiii_pair(int p, int q);
// Sp(n)/U(n)
SymmetricPair ci_pair(int n);
// SO(p+q)/SO(p)xSO(q) with p or q even
SymmetricPair bdi_pair(int p, int q);
// SO(2n)/U(n)
SymmetricPair diii_pair(int n);
// Sp(p+q)/Sp(p)xSp(q)
SymmetricPair cii_pair(int p, int q);

// Pair given by a Cartan matrix and one marked node: a root is compact iff
// its coefficient at the marked node is even.
SymmetricPair marked_cartan_pair(const CartanMatrix &cartan, int marked_node, PairMeta meta);

// K = G: no noncompact roots.
SymmetricPair degenerate_pair(RootSystem g, std::string name);

} // namespace diracspec
