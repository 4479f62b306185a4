#ifndef TORIC_FIXTURES_HPP
#define TORIC_FIXTURES_HPP

#include <string>
#include <vector>

#include "toric/charpair.hpp"

/// Small standard polytopes and characteristic pairs.
namespace toric::fixtures {

/// k-gon with facets F1..Fk in cyclic order; vertex j lies on F_{j-1} and F_j.
CombinatorialPolytope polygon(int k);
CombinatorialPolytope pentagon();
CombinatorialPolytope square();

/// n-simplex with facets F1..F(n+1); vertex i is the one missing F(i+1).
CombinatorialPolytope simplex(int n);

/**
 * Triangular prism with quadrilaterals F1, F2, F3 and triangles F4 (top),
 * F5 (bottom). v1 = F1 F3 F4, v2 = F1 F2 F4, v3 = F2 F3 F4, then the bottom
 * vertices F1 F2 F5, F2 F3 F5, F1 F3 F5.
 */
CombinatorialPolytope prism();

/// Cube with F1..F3 on the coordinate planes and F4..F6 opposite them.
CombinatorialPolytope cube();

/// Prism with lambda = (1,0,0), (0,1,0), (0,0,1), (1,2,4), (-1,-1,-1).
CharacteristicPair prism_pair();
/// Smooth pentagon: (1,0), (1,1), (0,1), (-1,0), (0,-1).
CharacteristicPair delzant_pentagon();
/// Pentagon whose vertex orders are all even: (1,0), (1,2), (-1,0), (-1,-2), (1,-2).
CharacteristicPair even_pentagon();
/// e_1, ..., e_n, -(1, ..., 1).
CharacteristicPair delzant_simplex(int n);
CharacteristicPair delzant_square();
CharacteristicPair delzant_cube();

std::vector<std::vector<Integer>> wps_weights();

struct NamedPolytope
{
    std::string name;
    CombinatorialPolytope polytope;
};

struct NamedPair
{
    std::string name;
    CharacteristicPair pair;
    bool delzant = false;
};

/// pentagon, prism, simplex2, simplex3, square, cube.
std::vector<NamedPolytope> polytopes();

/// Every pair above plus the WPS pairs.
std::vector<NamedPair> pairs();

}   // namespace toric::fixtures

#endif
