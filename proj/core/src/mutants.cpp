#include "spanbicat/mutants.hpp"

#include <algorithm>
#include <limits>

namespace spanbicat {

nlohmann::json FragmentDecorator::scope() const {
  nlohmann::json s = inner_->scope();
  s["mutation"] = mutation_;
  return s;
}

ReplacedAssociator::ReplacedAssociator(std::shared_ptr<const BicatFragment> inner, OneCell a, OneCell b, OneCell c,
                                       TwoCell replacement)
    : FragmentDecorator(std::move(inner)), a_(a), b_(b), c_(c), replacement_(replacement) {
  auto original = this->inner().associator(a, b, c);
  if (!original) throw ConstructionError("no associator at the replaced triple");
  if (original->src != replacement.src || original->tgt != replacement.tgt) {
    throw ConstructionError("replacement associator is not parallel to the original");
  }
  mutation_ = {{"kind", "replace-associator"},
               {"cells", {name(a), name(b), name(c)}},
               {"with", this->inner().name(replacement)}};
}

std::optional<TwoCell> ReplacedAssociator::associator(OneCell a, OneCell b, OneCell c) const {
  if (a == a_ && b == b_ && c == c_) return replacement_;
  return inner().associator(a, b, c);
}

DuplicatedTwoCell::DuplicatedTwoCell(std::shared_ptr<const BicatFragment> inner, TwoCell original,
                                     std::string copy_name)
    : FragmentDecorator(std::move(inner)),
      original_(original),
      copy_{original.src, original.tgt, std::numeric_limits<std::uint64_t>::max()},
      copy_name_(std::move(copy_name)) {
  auto existing = this->inner().two_cells(original.src, original.tgt);
  if (std::find(existing.begin(), existing.end(), original) == existing.end()) {
    throw ConstructionError("duplicated 2-cell is not in its hom-set");
  }
  for (const TwoCell& t : existing) {
    if (this->inner().name(t) == copy_name_) throw ConstructionError("duplicate name '" + copy_name_ + "' is taken");
  }
  mutation_ = {{"kind", "duplicate-two-cell"},
               {"source", name(original.src)},
               {"target", name(original.tgt)},
               {"cell", this->inner().name(original)},
               {"name", copy_name_}};
}

std::vector<TwoCell> DuplicatedTwoCell::two_cells(OneCell a, OneCell b) const {
  auto out = inner().two_cells(a, b);
  if (a == copy_.src && b == copy_.tgt) out.push_back(copy_);
  return out;
}

TwoCell DuplicatedTwoCell::vcomp(const TwoCell& alpha, const TwoCell& beta) const {
  if (alpha.tgt != beta.src) {
    throw CompositionError("vertical composite " + name(alpha) + " . " + name(beta) + " has mismatched endpoints");
  }
  if (alpha == copy_ && is_identity(beta)) return copy_;
  if (beta == copy_ && is_identity(alpha)) return copy_;
  return inner().vcomp(lower(alpha), lower(beta));
}

std::optional<TwoCell> DuplicatedTwoCell::hcomp(const TwoCell& alpha, const TwoCell& beta) const {
  return inner().hcomp(lower(alpha), lower(beta));
}

std::string DuplicatedTwoCell::name(const TwoCell& alpha) const {
  return alpha == copy_ ? copy_name_ : inner().name(alpha);
}

std::optional<TwoCell> DuplicatedTwoCell::parse_two_cell(OneCell src, OneCell tgt, std::string_view text) const {
  if (src == copy_.src && tgt == copy_.tgt && text == copy_name_) return copy_;
  return inner().parse_two_cell(src, tgt, text);
}

HiddenTwoCell::HiddenTwoCell(std::shared_ptr<const BicatFragment> inner, TwoCell hidden)
    : FragmentDecorator(std::move(inner)), hidden_(hidden) {
  if (this->inner().is_identity(hidden)) throw ConstructionError("identity 2-cells cannot be hidden");
  mutation_ = {{"kind", "hide-two-cell"},
               {"source", name(hidden.src)},
               {"target", name(hidden.tgt)},
               {"cell", this->inner().name(hidden)}};
}

std::vector<TwoCell> HiddenTwoCell::two_cells(OneCell a, OneCell b) const {
  auto out = inner().two_cells(a, b);
  std::erase(out, hidden_);
  return out;
}

DroppedOneCells::DroppedOneCells(std::shared_ptr<const BicatFragment> inner, std::vector<OneCell> dropped)
    : FragmentDecorator(std::move(inner)), dropped_(dropped.begin(), dropped.end()) {
  nlohmann::json names = nlohmann::json::array();
  for (OneCell a : dropped_) {
    if (!this->inner().is_base(a)) throw ConstructionError("only base 1-cells can be dropped");
    if (a == identity(source(a))) throw ConstructionError("identity 1-cells cannot be dropped");
    names.push_back(name(a));
  }
  mutation_ = {{"kind", "drop-one-cells"}, {"cells", names}};
}

std::vector<OneCell> DroppedOneCells::one_cells(ObjectId x, ObjectId z) const {
  auto out = inner().one_cells(x, z);
  std::erase_if(out, [&](OneCell a) { return dropped_.contains(a); });
  return out;
}

bool DroppedOneCells::is_base(OneCell a) const { return !dropped_.contains(a) && inner().is_base(a); }

void add_identity_coherence(TableFragment::Tables& t) {
  const std::size_t n = t.one_cells.size();
  auto comp = [&](std::size_t a, std::size_t b) -> std::optional<std::size_t> {
    auto it = t.hcomp_one.find({a, b});
    if (it == t.hcomp_one.end()) return std::nullopt;
    return it->second;
  };
  for (std::size_t a = 0; a < n; ++a) {
    const auto& ca = t.one_cells[a];
    std::size_t id = t.identity_two[a];
    if (comp(t.identity_one[ca.src], a) == a) t.left_unitors.try_emplace(a, TableFragment::Invertible{id, id});
    if (comp(a, t.identity_one[ca.tgt]) == a) t.right_unitors.try_emplace(a, TableFragment::Invertible{id, id});
    for (std::size_t b = 0; b < n; ++b) {
      auto ab = comp(a, b);
      if (!ab) continue;
      for (std::size_t c = 0; c < n; ++c) {
        auto bc = comp(b, c);
        if (!bc) continue;
        auto left = comp(*ab, c), right = comp(a, *bc);
        if (!left || left != right) continue;
        std::size_t cid = t.identity_two[*left];
        t.associators.try_emplace({a, b, c}, TableFragment::Invertible{cid, cid});
      }
    }
  }
  // Whiskering by identity 1-cells that act trivially.
  for (std::size_t i = 0; i < t.two_cells.size(); ++i) {
    const auto& alpha = t.two_cells[i];
    const auto& src = t.one_cells[alpha.src];
    std::size_t left_id = t.identity_two[t.identity_one[src.src]];
    std::size_t right_id = t.identity_two[t.identity_one[src.tgt]];
    if (comp(t.identity_one[src.src], alpha.src) == alpha.src &&
        comp(t.identity_one[src.src], alpha.tgt) == alpha.tgt) {
      t.hcomp_two.try_emplace({left_id, i}, i);
    }
    if (comp(alpha.src, t.identity_one[src.tgt]) == alpha.src &&
        comp(alpha.tgt, t.identity_one[src.tgt]) == alpha.tgt) {
      t.hcomp_two.try_emplace({i, right_id}, i);
    }
  }
}

std::shared_ptr<TableFragment> idempotent_component_fragment() {
  TableFragment::Tables t;
  t.objects = {"A", "M", "B"};
  enum : std::size_t { ea, em, eb, u, v, x, c };
  t.one_cells = {{"1_A", 0, 0}, {"1_M", 1, 1}, {"1_B", 2, 2}, {"u", 0, 1}, {"v", 1, 2}, {"x", 0, 2}, {"c", 0, 2}};
  t.identity_one = {ea, em, eb};
  for (const auto& cell : t.one_cells) {
    t.identity_two.push_back(t.two_cells.size());
    t.two_cells.push_back({"1_" + cell.name, t.identity_two.size() - 1, t.identity_two.size() - 1});
  }
  enum : std::size_t { g = 7, g2, p, q, bp, bq };
  t.two_cells.insert(t.two_cells.end(),
                     {{"g", c, x}, {"g'", c, x}, {"p", v, v}, {"q", v, v}, {"u*p", x, x}, {"u*q", x, x}});
  t.hcomp_one = {{{ea, ea}, ea}, {{em, em}, em}, {{eb, eb}, eb}, {{ea, u}, u}, {{u, em}, u}, {{em, v}, v},
                 {{v, eb}, v},   {{ea, x}, x},   {{x, eb}, x},   {{ea, c}, c}, {{c, eb}, c}, {{u, v}, x}};
  t.hcomp_two = {{{u, p}, bp}, {{u, q}, bq}};
  t.vcomp = {{{p, p}, p},    {{q, q}, q},    {{p, q}, q},   {{q, p}, p},  {{bp, bp}, bp}, {{bq, bq}, bq},
             {{bp, bq}, bq}, {{bq, bp}, bp}, {{g, bp}, g2}, {{g, bq}, g}, {{g2, bp}, g2}, {{g2, bq}, g}};
  add_identity_coherence(t);
  return std::make_shared<TableFragment>(std::move(t));
}

}  // namespace spanbicat
