#pragma once

#include <string>
#include <vector>

#include "cohom1/quat.hpp"

namespace cohom1 {

struct FiniteSubgroup {
  std::string name;
  std::vector<GElem> elements;
  bool contains(const GElem& g, double tol = 1e-9) const;
};

// true iff some element of H is within tol of g componentwise
bool in_subgroup(const GElem& g, const FiniteSubgroup& H, double tol);

// t -> (exp(p * axis_l * t), exp(q * axis_r * t)); q = 0 gives a circle in
// the left factor only.
struct CircleGroup {
  Quat axis_l = Quat::i();
  int p = 1;
  Quat axis_r = Quat::i();
  int q = 0;
  GElem at(double t) const;
  // whether g lies on the circle (some t with circle(t) == g within tol)
  bool contains(const GElem& g, double tol = 1e-9) const;
};

enum class ComponentKind { Circle, DiagonalSphere };

// Singular isotropy group: identity component plus finitely many cosets.
// Coset representatives normalize the identity component.
struct IsotropyGroup {
  ComponentKind kind = ComponentKind::Circle;
  CircleGroup circle;             // valid when kind == Circle
  std::vector<GElem> coset_reps;  // identity coset first
  bool contains(const GElem& g, double tol = 1e-9) const;
};

struct DiagramParams {
  int p = 0;  // E_p family
  int k = 0;  // P_k / Q_k families
};

// H in {K-, K+} in S^3 x S^3 together with the half-length L of the
// closed normal geodesic.  Diagrams without a distinguished metric carry
// the placeholder L = 1.
struct GroupDiagram {
  std::string name;
  std::string alias;  // alternate identification, label only
  FiniteSubgroup H;
  IsotropyGroup Kminus, Kplus;
  double L = 1.0;
  DiagramParams params;
};

// Names: S4, CP2, S7, B7, E_p (needs p >= 1), W1, W2, P_k (k >= 1),
// Q_k (k >= 1), R.
GroupDiagram catalog(const std::string& name, const DiagramParams& params = {});
std::vector<std::string> catalog_names();

// Representative of the geodesic-reversing involution contributed by a
// circle-type singular isotropy group: the smallest t0 > 0 with
// circle(t0) in H determines it as circle(t0 / 2); the result satisfies
// a^2 in H, a not in H.  Only axis-aligned finite H is supported.
GElem weyl_rep(const IsotropyGroup& K, const FiniteSubgroup& H);

// w- and w+ for one diagram; the 3-dimensional K- of E_p has the fixed
// representative (-1, -1).
GElem weyl_minus(const GroupDiagram& d);
GElem weyl_plus(const GroupDiagram& d);

// |W| = 2n where n is the smallest positive integer with (w+ w-)^n in H.
int weyl_order(const GroupDiagram& d);

}  // namespace cohom1
