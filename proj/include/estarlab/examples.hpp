#pragma once

#include "estarlab/bioperation.hpp"
#include "estarlab/morphism.hpp"

namespace estarlab::examples {

/// The worked three-point instances exercised by the golden suite and the
/// CLI demos. Each builder returns a freshly constructed, fully bound
/// bundle on its own space.

struct PairFixture {
    SpacePtr space;
    OperationPtr gamma;
    OperationPtr gamma_prime;
    BiopContextPtr ctx;
};

struct MapFixture {
    SpacePtr space;
    BiopContextPtr dom;
    BiopContextPtr cod;
    std::shared_ptr<const FiniteFunction> f;
};

/// {w1,w2,w3}, τ = {∅,X,{w2},{w3},{w1,w2},{w2,w3}};
/// A^γ = Cl(A) if w3 ∈ A else X;  A^γ′ = X if A = {w2} else A.
PairFixture ex_3_1();

/// {u1,u2,u3}, τ = {∅,X,{u1}};  A^γ = X;  A^γ′ = A if A = {u1,u2} else X.
PairFixture ex_3_3();

/// {t1,t2,t3}, discrete;  A^γ = A^γ′ = A if A ∈ {{t1,t2},{t2,t3}} else X.
PairFixture ex_3_5();

/// {v1,v2,v3}, τ = {∅,X,{v2}};  γ = γ′ = id.
PairFixture ex_post_3_6();

/// {z1,z2,z3}, τ = {∅,X,{z1},{z2},{z1,z2}};  γ = Cl, γ′ = X.
PairFixture ex_3_6();

/// Same topology shape on {s1,s2,s3}; γ = γ′ = β′ = X, β = Cl; f = id.
MapFixture ex_4_1();

/// Same space; γ = β = Cl, γ′ = β′ = X; f the cycle s1→s2→s3→s1.
MapFixture ex_4_2();

}  // namespace estarlab::examples
