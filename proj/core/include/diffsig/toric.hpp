#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace diffsig {

using IntVector = std::vector<long>;
using RatVector = std::vector<mpq_class>;

/// Pointed rational cone with primitive integer rays and facet forms.
/// When the input rays do not span the ambient space, `span_basis` holds an
/// integer basis of span(rays) ∩ Z^d and rays/facets are written in it.
struct RationalCone {
  std::size_t dimension = 0;
  std::vector<IntVector> rays;
  std::vector<IntVector> facets;  // l with l(ray) >= 0 for every ray
  std::vector<IntVector> span_basis;
};

struct RationalPolytope {
  std::size_t dimension = 0;  // dimension of the affine span
  std::vector<RatVector> vertices;
};

/// R = K[N^r ∩ L] with L spanned by the given integer vectors.
struct LinearSubspaceSemigroup {
  std::size_t ambient = 0;
  std::vector<IntVector> basis;
};

/// Primitive facet forms by brute force over (d-1)-subsets of rays.
RationalCone cone_facets(const std::vector<IntVector>& rays);
/// The cone {x : l_i(x) >= 0}; rays recovered from (d-1)-subsets of forms.
RationalCone cone_from_facets(const std::vector<IntVector>& facets);

/// d! vol{P in C : (l_1 + ... + l_r)(P) <= 1}. `seed` picks the apexes of the
/// triangulation; the value does not depend on it.
mpq_class diff_signature_polytope(const RationalCone& cone, unsigned seed = 0);
/// The polytope {P in C : sum l_i(P) <= 1} as a vertex list.
RationalPolytope diff_signature_region(const RationalCone& cone);

/// vol_L(cube ∩ L), measured in the lattice L ∩ Z^r.
mpq_class f_signature_polytope(const LinearSubspaceSemigroup& l, unsigned seed = 0);
/// vol{v : 0 <= l_i(v) <= 1 for every facet l_i}, in the lattice of the cone.
mpq_class f_signature_cone(const RationalCone& cone, unsigned seed = 0);
/// The subspace spanned by the facet map v -> (l_1(v), ..., l_r(v)).
LinearSubspaceSemigroup subspace_of_cone(const RationalCone& cone);
/// #(n cube ∩ L ∩ Z^r) / n^d, converging to f_signature_polytope.
mpq_class lattice_count_ratio(const LinearSubspaceSemigroup& l, long n);

/// Volume of the convex hull in its affine span, normalized so that a unimodular
/// simplex of the lattice (span ∩ Z^d) has volume 1/k!. Equals the Euclidean
/// volume for full-dimensional input.
mpq_class polytope_volume(const RationalPolytope& p, unsigned seed = 0);

/// Integer basis of {x in Z^n : A x = 0}.
std::vector<IntVector> integer_kernel(const std::vector<IntVector>& a, std::size_t ncols);
/// Integer basis of span(vectors) ∩ Z^n.
std::vector<IntVector> saturate(const std::vector<IntVector>& vectors, std::size_t n);

/// Cone of the Segre product of P^(m-1) and P^(n-1), in coordinates
/// (a_1..a_m, b_1..b_(n-1)).
RationalCone segre_cone(unsigned m, unsigned n);
/// Cone of the d-th Veronese subring of K[x, y].
RationalCone veronese_cone(unsigned d);
/// {a_1 + .. + a_m = b_1 + .. + b_n} in R^(m+n): the Segre product as K[N^(m+n) ∩ L].
LinearSubspaceSemigroup segre_subspace(unsigned m, unsigned n);

/// {"rays": [[...]]} or {"facets": [[...]]}.
RationalCone load_cone_json(const std::string& text);
/// {"lattice_basis": [[...]]}.
LinearSubspaceSemigroup load_subspace_json(const std::string& text);

}  // namespace diffsig
