#pragma once

#include <memory>
#include <string>
#include <vector>

#include "biset.hpp"
#include "characters.hpp"
#include "cyclotomic.hpp"

namespace bisetkit {

using CVector = std::vector<Cyclotomic>;
using CMatrix = std::vector<CVector>;

/** A biset functor known through its evaluations and the action of transitive bisets. */
class FunctorHandle
{
public:
  virtual ~FunctorHandle() = default;

  virtual std::string name() const = 0;
  virtual Flavor flavor() const = 0;
  virtual std::size_t dimension(GroupPtr const &g) const = 0;
  virtual std::vector<std::string> basis_labels(GroupPtr const &g) const = 0;
  // (H x G)/L applied to a vector of F(G)
  virtual CVector act(GoursatClass const &l, CVector const &v) const = 0;

  CVector act(BisetElt const &x, CVector const &v) const;
  // images of the basis vectors of F(G), one per column, stored as rows
  CMatrix images(GoursatClass const &l) const;
};

using FunctorPtr = std::shared_ptr<FunctorHandle const>;

// K B (classical) or K B^Delta (bifree)
FunctorPtr burnside_functor(Flavor flavor);
// class functions on all classes (support_p = 0) or on p-regular classes
FunctorPtr class_function_functor(int support_p, Flavor flavor);
// subfunctor of class functions generated by gen
FunctorPtr span_functor(ClassFunction const &gen, Flavor flavor);
// endomorphisms through smaller groups act by zero; not a functor
FunctorPtr corrupted_functor(FunctorPtr base);

struct KernelSpace
{
  GroupPtr group;
  CMatrix basis;                       // rows, reduced
  std::vector<CMatrix> out_action;     // per Out(G) class, acting on kernel coordinates (column convention)

  std::size_t dim() const { return basis.size(); }
};

// one quotient group per isomorphism type of proper section
std::vector<GroupPtr> proper_section_quotients(GroupPtr const &g);

KernelSpace restriction_kernel(FunctorHandle const &f, GroupPtr const &g);
// reduced basis of the sum of images from proper section quotients
CMatrix image_sum(FunctorHandle const &f, GroupPtr const &g);
// reduced basis of I_G F(G)
CMatrix ideal_image(FunctorHandle const &f, GroupPtr const &g);
bool verify_condition(FunctorHandle const &f, GroupPtr const &g);

struct Splitting
{
  std::size_t dim = 0, kernel_dim = 0, image_dim = 0, intersection_dim = 0;
  bool direct_sum() const { return intersection_dim == 0 && kernel_dim + image_dim == dim; }
};
Splitting splitting(FunctorHandle const &f, GroupPtr const &g);

// every basis morphism to a proper section quotient kills v
bool annihilated_by_proper_sections(FunctorHandle const &f, GroupPtr const &g, CVector const &v);

// multiplicity of the Out(G)-character xi (a acts by xi(a)) in the kernel
long out_multiplicity(KernelSpace const &k, CVector const &xi);

/** Simple functor label (G0, xi) with xi a linear character of Out(G0), indexed by Out class. */
struct SimpleLabel
{
  GroupPtr group;
  CVector xi;

  SimpleLabel(GroupPtr g, CVector xi);
  static SimpleLabel trivial(GroupPtr const &g);
  // (C_m, xi) with Out(C_m) identified with (Z/m)^x
  static SimpleLabel dirichlet(UnitCharacter const &xi);

  std::string to_string() const;
};

// (Z/m)^x unit for each Out(C_m) class
std::vector<long> out_units(long m);

long simple_dim(SimpleLabel const &label, GroupPtr const &h, Flavor flavor);

} // namespace bisetkit
