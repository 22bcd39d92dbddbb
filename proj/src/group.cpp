#include "fuchsian/group.hpp"

#include <deque>
#include <map>

#include "fuchsian/construct.hpp"

namespace fuchsian {

std::string to_string(ElementKind k) {
  switch (k) {
    case ElementKind::Identity: return "identity";
    case ElementKind::Elliptic: return "elliptic";
    case ElementKind::Parabolic: return "parabolic";
    case ElementKind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

GroupElement GroupElement::identity() {
  return GroupElement{{}, Mat2::identity(), Mat3::identity(), 1};
}

GroupElement element_of(const InvolutionData& g) {
  return GroupElement{{g.index}, g.proj, g.lorentz, g.det_class};
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  GroupElement out;
  out.word = g.word;
  for (int idx : h.word) {
    if (!out.word.empty() && out.word.back() == idx)
      out.word.pop_back();  // generators are involutions
    else
      out.word.push_back(idx);
  }
  out.proj = canonical_projective(g.proj * h.proj);
  out.lorentz = g.lorentz * h.lorentz;
  out.det_class = square_class_combine(g.det_class, h.det_class);
  return out;
}

ElementKind classify_element(const GroupElement& g) {
  Rational det = g.proj.det();
  if (det <= 0) throw InvariantViolation("canonical representative has det <= 0");
  if (is_scalar(g.proj)) return ElementKind::Identity;
  Rational disc = g.proj.trace() * g.proj.trace() - 4 * det;
  if (disc > 0) return ElementKind::Hyperbolic;
  if (disc == 0) return ElementKind::Parabolic;
  return ElementKind::Elliptic;
}

bool fixes_boundary_point(const GroupElement& g, const BoundaryPoint& r) {
  const Mat2& m = g.proj;
  if (r.is_infinity) return m.c == 0;
  const Rational& z = r.value;
  return m.c * z * z + (m.d - m.a) * z - m.b == 0;
}

Presentation presentation_of(const GroupBlueprint& b) {
  Presentation p;
  p.generator_count = b.n + 1;
  for (int i = b.n; i >= 0; --i) p.cusp_word.push_back(i);
  return p;
}

GroupElement hyperbolic_witness(const GroupBlueprint& b, int i) {
  if (i < 1 || i > b.n - 1) throw std::out_of_range("witness index");
  return multiply(element_of(b.generators.at(i)), element_of(b.generators.at(i + 1)));
}

PslKernel psl_kernel(const GroupBlueprint& b) {
  const int ngen = b.n + 1;
  std::vector<Int> labels;
  for (const InvolutionData& g : b.generators) labels.push_back(g.det_class);
  std::vector<Int> basis = coprime_basis(labels);

  auto mask_of = [&](const Int& label) {
    std::vector<bool> par = parity_vector(label, basis);
    unsigned long long m = 0;
    for (size_t i = 0; i < par.size(); ++i)
      if (par[i]) m |= 1ull << i;
    return m;
  };
  std::vector<unsigned long long> gen_mask(ngen);
  for (int j = 0; j < ngen; ++j) gen_mask[j] = mask_of(labels[j]);

  // BFS over the image subgroup, generators in index order
  std::map<unsigned long long, std::vector<int>> transversal;
  std::deque<unsigned long long> queue;
  std::vector<unsigned long long> order;
  transversal[0] = {};
  queue.push_back(0);
  order.push_back(0);
  while (!queue.empty()) {
    unsigned long long s = queue.front();
    queue.pop_front();
    for (int j = 0; j < ngen; ++j) {
      unsigned long long t = s ^ gen_mask[j];
      if (!transversal.count(t)) {
        auto w = transversal[s];
        w.push_back(j);
        transversal[t] = w;
        queue.push_back(t);
        order.push_back(t);
      }
    }
  }

  auto element_of_word = [&](const std::vector<int>& w) {
    GroupElement e = GroupElement::identity();
    for (int j : w) e = multiply(e, element_of(b.generators.at(j)));
    return e;
  };

  PslKernel out;
  out.index = order.size();  // 2^rank cosets reached by BFS
  for (auto s : order) out.transversal.push_back(transversal[s]);

  for (auto s : order) {
    const auto& r = transversal[s];
    for (int j = 0; j < ngen; ++j) {
      unsigned long long t = s ^ gen_mask[j];
      // word r j rep(t)^-1, freely reduced in the free product of Z/2s
      std::vector<int> w = r;
      if (!w.empty() && w.back() == j)
        w.pop_back();
      else
        w.push_back(j);
      const auto& rt = transversal[t];
      for (auto it = rt.rbegin(); it != rt.rend(); ++it) {
        if (!w.empty() && w.back() == *it)
          w.pop_back();
        else
          w.push_back(*it);
      }
      if (w.empty()) continue;
      out.kernel_generators.push_back(element_of_word(w));
    }
  }
  return out;
}

NotCuspCertificate not_cusp_certificate(const GroupBlueprint& b, const Rational& y) {
  for (int i = 1; i <= b.n - 1; ++i) {
    if (b.y_point(i) == y) {
      NotCuspCertificate c;
      c.point = y;
      c.witness = hyperbolic_witness(b, i);
      c.note =
          "the witness is hyperbolic and fixes this boundary point, so the "
          "point is a hyperbolic fixed point and therefore not a cusp";
      return c;
    }
  }
  throw std::invalid_argument("no witness constructed for this point");
}

}  // namespace fuchsian
