#include "spanbicat/dot.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "spanbicat/generic.hpp"

namespace spanbicat {

namespace {

struct DotEdge {
  std::size_t from;
  std::size_t to;
  std::string label;
  std::string style;
};

class DotGraph {
 public:
  explicit DotGraph(std::string name) : name_(std::move(name)) {}

  std::size_t node(const std::string& label, std::size_t rank) {
    labels_.push_back(label);
    ranks_.push_back(rank);
    return labels_.size() - 1;
  }
  void edge(std::size_t from, std::size_t to, std::string label, std::string style = "") {
    edges_.push_back({from, to, std::move(label), std::move(style)});
  }

  std::string str() const {
    std::ostringstream out;
    out << "digraph " << name_ << " {\n";
    out << "  node [shape=plaintext];\n";
    for (std::size_t i = 0; i < labels_.size(); ++i) out << "  n" << i << " [label=\"" << labels_[i] << "\"];\n";
    std::size_t max_rank = 0;
    for (std::size_t r : ranks_) max_rank = std::max(max_rank, r);
    for (std::size_t r = 0; r <= max_rank; ++r) {
      std::string row;
      for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (ranks_[i] == r) row += " n" + std::to_string(i) + ";";
      }
      if (!row.empty()) out << "  { rank=same;" << row << " }\n";
    }
    for (const auto& e : edges_) {
      out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.label << "\"";
      if (!e.style.empty()) out << ", style=" << e.style;
      out << "];\n";
    }
    out << "}\n";
    return out.str();
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> ranks_;
  std::vector<DotEdge> edges_;
};

std::string object_label(const SpanFragment& f, const char* role, ObjectId x) {
  return std::string(role) + " = " + f.object_name(x);
}

std::string apex_label(const SpanFragment& f, const char* role, Obj apex) {
  return std::string(role) + " = " + f.base().object_name(apex);
}

const SpanFragment& span_fragment_of(const Analyzer& an) {
  const auto* f = dynamic_cast<const SpanFragment*>(&an.fragment());
  if (!f) throw ConstructionError("DOT export needs a span fragment");
  return *f;
}

}  // namespace

std::string span_dot(const SpanFragment& f, OneCell a) {
  const auto l = f.legs(a);
  DotGraph g("span");
  std::size_t t = g.node(apex_label(f, "T", l.apex), 0);
  std::size_t x = g.node(object_label(f, "X", l.src), 1);
  std::size_t z = g.node(object_label(f, "Z", l.tgt), 1);
  g.edge(t, x, f.base().arrow_name(l.left));
  g.edge(t, z, f.base().arrow_name(l.right));
  return g.str();
}

std::string span_morphism_dot(const SpanFragment& f, const TwoCell& alpha) {
  const auto a = f.legs(alpha.src), b = f.legs(alpha.tgt);
  DotGraph g("span_morphism");
  std::size_t s = g.node(apex_label(f, "S", a.apex), 0);
  std::size_t t = g.node(apex_label(f, "T", b.apex), 1);
  std::size_t x = g.node(object_label(f, "X", a.src), 2);
  std::size_t z = g.node(object_label(f, "Z", a.tgt), 2);
  g.edge(s, t, f.base().arrow_name(f.map(alpha)), "dashed");
  g.edge(s, x, f.base().arrow_name(a.left));
  g.edge(s, z, f.base().arrow_name(a.right));
  g.edge(t, x, f.base().arrow_name(b.left));
  g.edge(t, z, f.base().arrow_name(b.right));
  return g.str();
}

std::string composite_dot(const SpanFragment& f, OneCell a, OneCell b) {
  const auto la = f.legs(a), lb = f.legs(b);
  if (la.tgt != lb.src) throw CompositionError("spans " + f.name(a) + ", " + f.name(b) + " are not composable");
  auto pb = f.base().pullback(la.right, lb.left);
  if (!pb) throw FragmentIncomplete("no chosen pullback for " + f.name(a) + ";" + f.name(b));
  DotGraph g("composite");
  std::size_t p = g.node(apex_label(f, "P", pb->apex), 0);
  std::size_t s = g.node(apex_label(f, "S", la.apex), 1);
  std::size_t t = g.node(apex_label(f, "T", lb.apex), 1);
  std::size_t x = g.node(object_label(f, "X", la.src), 2);
  std::size_t y = g.node(object_label(f, "Y", la.tgt), 2);
  std::size_t z = g.node(object_label(f, "Z", lb.tgt), 2);
  g.edge(p, s, f.base().arrow_name(pb->p1));
  g.edge(p, t, f.base().arrow_name(pb->p2));
  g.edge(p, y, f.base().arrow_name(f.base().compose(pb->p1, la.right)), "dashed");
  g.edge(s, x, f.base().arrow_name(la.left));
  g.edge(s, y, f.base().arrow_name(la.right));
  g.edge(t, y, f.base().arrow_name(lb.left));
  g.edge(t, z, f.base().arrow_name(lb.right));
  return g.str();
}

std::string factorization_dot(const Analyzer& an, const Element& gamma) {
  const SpanFragment& f = span_fragment_of(an);
  const ObjectId y = f.target(gamma.left);
  const auto& el = an.elements(gamma.cell.src, y);
  const Element delta = factor_through_generic(el, gamma).generic.cell;
  const auto c = f.legs(gamma.cell.src), l = f.legs(delta.left), r = f.legs(delta.right);
  const auto m = f.legs(delta.cell.tgt);
  auto pb = f.base().pullback(l.right, r.left);
  if (!pb) throw FragmentIncomplete("no chosen pullback under the generic");

  DotGraph g("factorization");
  std::size_t top = g.node(apex_label(f, "T", c.apex), 0);
  std::size_t mid = g.node(apex_label(f, "M", m.apex), 1);
  std::size_t tl = g.node(apex_label(f, "T1", l.apex), 2);
  std::size_t tr = g.node(apex_label(f, "T2", r.apex), 2);
  std::size_t x = g.node(object_label(f, "X", c.src), 3);
  std::size_t yy = g.node(object_label(f, "Y", y), 3);
  std::size_t z = g.node(object_label(f, "Z", c.tgt), 3);
  g.edge(top, x, f.base().arrow_name(c.left));
  g.edge(top, z, f.base().arrow_name(c.right));
  g.edge(top, mid, f.base().arrow_name(f.map(delta.cell)), "dotted");
  g.edge(mid, tl, f.base().arrow_name(pb->p1));
  g.edge(mid, tr, f.base().arrow_name(pb->p2));
  g.edge(tl, x, f.base().arrow_name(l.left));
  g.edge(tl, yy, f.base().arrow_name(l.right));
  g.edge(tr, yy, f.base().arrow_name(r.left));
  g.edge(tr, z, f.base().arrow_name(r.right));
  return g.str();
}

}  // namespace spanbicat
