#pragma once

#include <string>
#include <vector>

#include "galpts/transformations.hpp"

namespace galpts {

/// Linear relations over K among functions on one curve: a basis of the
/// vectors c with sum c_i fs[i] = 0.
std::vector<std::vector<Elem>> linear_relations(const std::vector<FFElem>& fs);

enum class PointKind { InnerSmooth, InnerSingular, Outer };
const char* point_kind_name(PointKind k);
PointKind classify_point(const PlaneCurve& image, const ProjPoint& pt);
/// Multiplicity of the curve at pt (0 off the curve).
int point_multiplicity(const PlaneCurve& image, const ProjPoint& pt);

/// The projection from `center` as a function on the source: L1(f,g,1)/L2(f,g,1)
/// for two independent lines through the center.
FFElem projection_function(const ProjPoint& center, const FFElem& f, const FFElem& g);

struct GaloisCertificate {
  ProjPoint center;
  PointKind kind = PointKind::Outer;
  std::string group;
  size_t group_order = 0;
  bool pencil_ok = false;     // projection is a Moebius function of t
  bool distinct = false;      // (i)
  bool fixes_t = false;       // (ii)
  int ext_degree = 0;         // (iii) [K(C):K(t)]
  bool degree_ok = false;
  int projection_degree = 0;  // (iv) d - multiplicity(center)
  bool bookkeeping_ok = false;
  int ramification = -1;      // inner centers: e at the place over the center
  bool ramification_ok = true;
  ExtensionDegreeReport ext;

  bool ok() const { return pencil_ok && distinct && fixes_t && degree_ok && bookkeeping_ok && ramification_ok; }
};

struct EmbeddingResult {
  CurvePtr source;
  RatMap map;  // source -> image, (f : g : 1)
  FFElem f, g;
  CurvePtr image;
  int image_degree = 0;
  int relation_count = 0;     // dimension of the degree-d relation space (must be 1)
  bool birational = false;    // deg_V H = [K(C):K(f)]
  bool injective_samples = false;
  bool sample_points_ok = false;  // random source points land on the image
  std::vector<GaloisCertificate> certs;
};

/// Implicit equation H(U, V) of the image of (f : g : 1), assumed of total
/// degree `degree`; throws MathError if the relation space is not one-dimensional.
BiPoly implicit_equation(const FFElem& f, const FFElem& g, int degree, int* relation_count = nullptr);

/// Builds the image and checks birationality. Certificates are added by the
/// caller through galois_certify.
EmbeddingResult build_embedding(const FFElem& f, const FFElem& g, int expected_degree, uint64_t seed = 0);

/// e at `place` of the projection from `center`.
int ramification_index(const ProjPoint& center, const Place& place, const FFElem& f, const FFElem& g);

/// Certificate for one center; `inner_place` is the place over an inner
/// center (nullptr for outer centers).
GaloisCertificate galois_certify(const ProjPoint& center, const FFElem& t, const AutGroup& G, const FFElem& f,
                                 const FFElem& g, const PlaneCurve& image, const Place* inner_place,
                                 uint64_t seed = 0);

struct ExclusionItem {
  std::string name;
  bool ok = false;
  bool machine_checked = true;
  std::string witness;
};
/// The checkable exclusions on the image of (1/y : x^s/y : 1); rejects (3, 2).
std::vector<ExclusionItem> proposition_exclusion_suite(const FamilyConstants& pc, uint64_t seed = 0, int precision = 0);

}  // namespace galpts
