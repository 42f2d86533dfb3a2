#include "monophilic/classify2.hpp"

#include "monophilic/errors.hpp"

namespace monophilic {

namespace {

CoreShape core_shape_of(const Graph& g) {
  if (!is_connected(g) || g.vertex_count() == 0) throw InputError("classification requires a connected graph");
  return classify_core_shape(core(g));
}

}  // namespace

bool classify_2_monophilic(const Graph& g) {
  const CoreShape shape = core_shape_of(g);
  if (!is_bipartite(g)) return true;
  using Kind = CoreShape::Kind;
  // A bipartite cycle is even, so EvenCycle covers every cycle here.
  return shape.kind == Kind::SingleVertex || shape.kind == Kind::EvenCycle || shape.kind == Kind::K23;
}

bool classify_2_choosable(const Graph& g) {
  const CoreShape shape = core_shape_of(g);
  using Kind = CoreShape::Kind;
  switch (shape.kind) {
    case Kind::SingleVertex:
    case Kind::EvenCycle:
    case Kind::K23:
      return true;
    case Kind::Theta:
      return shape.theta[0] == 2 && shape.theta[1] == 2 && shape.theta[2] % 2 == 0;
    default:
      return false;
  }
}

}  // namespace monophilic
