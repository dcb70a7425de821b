#include "spanbicat/table_fragment.hpp"

#include <algorithm>

namespace spanbicat {

namespace {

std::string str(std::string_view s) { return std::string(s); }

}  // namespace

TableFragment::TableFragment(Tables t) : t_(std::move(t)) {
  const std::size_t nobj = t_.objects.size(), n1 = t_.one_cells.size(), n2 = t_.two_cells.size();
  if (t_.identity_one.size() != nobj) throw ConstructionError("one identity 1-cell per object required");
  if (t_.identity_two.size() != n1) throw ConstructionError("one identity 2-cell per 1-cell required");
  homs_.assign(nobj, std::vector<std::vector<std::size_t>>(nobj));
  for (std::size_t i = 0; i < n1; ++i) {
    const auto& c = t_.one_cells[i];
    if (c.src >= nobj || c.tgt >= nobj) throw ConstructionError("1-cell '" + c.name + "' has unknown endpoint");
    if (!one_by_name_.emplace(c.name, i).second) throw ConstructionError("duplicate 1-cell name '" + c.name + "'");
    homs_[c.src][c.tgt].push_back(i);
  }
  for (std::size_t x = 0; x < nobj; ++x) {
    std::size_t id = t_.identity_one[x];
    if (id >= n1 || t_.one_cells[id].src != x || t_.one_cells[id].tgt != x) {
      throw ConstructionError("identity 1-cell of '" + t_.objects[x] + "' has wrong endpoints");
    }
  }
  for (std::size_t i = 0; i < n2; ++i) {
    const auto& c = t_.two_cells[i];
    if (c.src >= n1 || c.tgt >= n1) throw ConstructionError("2-cell '" + c.name + "' has unknown endpoint");
    if (t_.one_cells[c.src].src != t_.one_cells[c.tgt].src || t_.one_cells[c.src].tgt != t_.one_cells[c.tgt].tgt) {
      throw ConstructionError("2-cell '" + c.name + "' joins non-parallel 1-cells");
    }
    if (!two_by_name_.emplace(c.name, i).second) throw ConstructionError("duplicate 2-cell name '" + c.name + "'");
    two_homs_[{c.src, c.tgt}].push_back(i);
  }
  for (std::size_t a = 0; a < n1; ++a) {
    std::size_t id = t_.identity_two[a];
    if (id >= n2 || t_.two_cells[id].src != a || t_.two_cells[id].tgt != a) {
      throw ConstructionError("identity 2-cell of '" + t_.one_cells[a].name + "' has wrong endpoints");
    }
  }
  for (const auto& [k, v] : t_.vcomp) {
    if (k.first >= n2 || k.second >= n2 || v >= n2) throw ConstructionError("vcomp entry refers to unknown 2-cell");
    const auto &a = t_.two_cells[k.first], &b = t_.two_cells[k.second], &r = t_.two_cells[v];
    if (a.tgt != b.src || r.src != a.src || r.tgt != b.tgt) {
      throw ConstructionError("vcomp entry " + a.name + "," + b.name + " has mismatched endpoints");
    }
  }
  for (const auto& [k, v] : t_.hcomp_one) {
    if (k.first >= n1 || k.second >= n1 || v >= n1) throw ConstructionError("hcomp entry refers to unknown 1-cell");
    const auto &a = t_.one_cells[k.first], &b = t_.one_cells[k.second], &r = t_.one_cells[v];
    if (a.tgt != b.src || r.src != a.src || r.tgt != b.tgt) {
      throw ConstructionError("hcomp entry " + a.name + "," + b.name + " has mismatched endpoints");
    }
  }
  for (const auto& [k, v] : t_.hcomp_two) {
    if (k.first >= n2 || k.second >= n2 || v >= n2) throw ConstructionError("hcomp entry refers to unknown 2-cell");
    const auto &a = t_.two_cells[k.first], &b = t_.two_cells[k.second], &r = t_.two_cells[v];
    auto s = t_.hcomp_one.find({a.src, b.src});
    auto d = t_.hcomp_one.find({a.tgt, b.tgt});
    if (s == t_.hcomp_one.end() || d == t_.hcomp_one.end() || r.src != s->second || r.tgt != d->second) {
      throw ConstructionError("hcomp entry " + a.name + "," + b.name + " has mismatched endpoints");
    }
  }
  auto check_inv = [&](const Invertible& e, std::size_t src, std::size_t tgt, const std::string& what) {
    if (e.forward >= n2 || e.inverse >= n2 || t_.two_cells[e.forward].src != src ||
        t_.two_cells[e.forward].tgt != tgt || t_.two_cells[e.inverse].src != tgt ||
        t_.two_cells[e.inverse].tgt != src) {
      throw ConstructionError(what + " has mismatched endpoints");
    }
  };
  for (const auto& [k, e] : t_.associators) {
    auto ab = t_.hcomp_one.at({k[0], k[1]});
    auto bc = t_.hcomp_one.at({k[1], k[2]});
    check_inv(e, t_.hcomp_one.at({ab, k[2]}), t_.hcomp_one.at({k[0], bc}), "associator");
  }
  for (const auto& [a, e] : t_.left_unitors) {
    check_inv(e, t_.hcomp_one.at({t_.identity_one[t_.one_cells[a].src], a}), a, "left unitor");
  }
  for (const auto& [a, e] : t_.right_unitors) {
    check_inv(e, t_.hcomp_one.at({a, t_.identity_one[t_.one_cells[a].tgt]}), a, "right unitor");
  }
}

TwoCell TableFragment::cell(std::size_t index) const {
  const auto& c = t_.two_cells.at(index);
  return TwoCell{OneCell{c.src}, OneCell{c.tgt}, index};
}

std::vector<OneCell> TableFragment::one_cells(ObjectId x, ObjectId z) const {
  std::vector<OneCell> out;
  for (std::size_t i : homs_.at(x).at(z)) out.push_back(OneCell{i});
  return out;
}

std::vector<TwoCell> TableFragment::two_cells(OneCell a, OneCell b) const {
  std::vector<TwoCell> out;
  auto it = two_homs_.find({a.id, b.id});
  if (it == two_homs_.end()) return out;
  for (std::size_t i : it->second) out.push_back(cell(i));
  return out;
}

TwoCell TableFragment::vcomp(const TwoCell& alpha, const TwoCell& beta) const {
  if (alpha.tgt != beta.src) {
    throw CompositionError("vertical composite " + name(alpha) + " . " + name(beta) + " has mismatched endpoints");
  }
  if (is_identity(alpha)) return beta;
  if (is_identity(beta)) return alpha;
  auto it = t_.vcomp.find({alpha.local, beta.local});
  if (it == t_.vcomp.end()) {
    throw FragmentIncomplete("vertical composite " + name(alpha) + " . " + name(beta) + " not tabulated");
  }
  return cell(it->second);
}

std::optional<OneCell> TableFragment::hcomp(OneCell a, OneCell b) const {
  if (target(a) != source(b)) throw CompositionError("1-cells " + name(a) + ", " + name(b) + " not composable");
  auto it = t_.hcomp_one.find({a.id, b.id});
  if (it == t_.hcomp_one.end()) return std::nullopt;
  return OneCell{it->second};
}

std::optional<TwoCell> TableFragment::hcomp(const TwoCell& alpha, const TwoCell& beta) const {
  auto it = t_.hcomp_two.find({alpha.local, beta.local});
  if (it != t_.hcomp_two.end()) return cell(it->second);
  if (is_identity(alpha) && is_identity(beta)) {
    auto c = hcomp(alpha.src, beta.src);
    if (c) return identity(*c);
  }
  return std::nullopt;
}

std::optional<TwoCell> TableFragment::associator(OneCell a, OneCell b, OneCell c) const {
  auto it = t_.associators.find({a.id, b.id, c.id});
  if (it == t_.associators.end()) return std::nullopt;
  return cell(it->second.forward);
}

std::optional<TwoCell> TableFragment::associator_inverse(OneCell a, OneCell b, OneCell c) const {
  auto it = t_.associators.find({a.id, b.id, c.id});
  if (it == t_.associators.end()) return std::nullopt;
  return cell(it->second.inverse);
}

std::optional<TwoCell> TableFragment::left_unitor(OneCell a) const {
  auto it = t_.left_unitors.find(a.id);
  if (it == t_.left_unitors.end()) return std::nullopt;
  return cell(it->second.forward);
}

std::optional<TwoCell> TableFragment::left_unitor_inverse(OneCell a) const {
  auto it = t_.left_unitors.find(a.id);
  if (it == t_.left_unitors.end()) return std::nullopt;
  return cell(it->second.inverse);
}

std::optional<TwoCell> TableFragment::right_unitor(OneCell a) const {
  auto it = t_.right_unitors.find(a.id);
  if (it == t_.right_unitors.end()) return std::nullopt;
  return cell(it->second.forward);
}

std::optional<TwoCell> TableFragment::right_unitor_inverse(OneCell a) const {
  auto it = t_.right_unitors.find(a.id);
  if (it == t_.right_unitors.end()) return std::nullopt;
  return cell(it->second.inverse);
}

std::optional<OneCell> TableFragment::parse_one_cell(std::string_view text) const {
  auto it = one_by_name_.find(str(text));
  if (it == one_by_name_.end()) return std::nullopt;
  return OneCell{it->second};
}

std::optional<TwoCell> TableFragment::parse_two_cell(OneCell src, OneCell tgt, std::string_view text) const {
  auto it = two_by_name_.find(str(text));
  if (it == two_by_name_.end()) return std::nullopt;
  TwoCell c = cell(it->second);
  if (c.src != src || c.tgt != tgt) return std::nullopt;
  return c;
}

nlohmann::json TableFragment::scope() const {
  nlohmann::json objs = nlohmann::json::array();
  for (const auto& o : t_.objects) objs.push_back(o);
  return nlohmann::json{
      {"kind", "table"}, {"objects", objs}, {"one_cells", t_.one_cells.size()}, {"two_cells", t_.two_cells.size()}};
}

void MonoidPresentation::validate() const {
  const std::size_t n = elements.size();
  if (n == 0) throw ConstructionError("monoid needs at least one element");
  if (unit >= n) throw ConstructionError("monoid unit out of range");
  if (mult.size() != n) throw ConstructionError("monoid table has wrong number of rows");
  for (const auto& row : mult) {
    if (row.size() != n) throw ConstructionError("monoid table row has wrong length");
    for (std::size_t v : row) {
      if (v >= n) throw ConstructionError("monoid table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (mult[unit][a] != a || mult[a][unit] != a) {
      throw ConstructionError("unit law fails at '" + elements[a] + "'");
    }
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]]) {
          throw ConstructionError("associativity fails at (" + elements[a] + "," + elements[b] + "," + elements[c] +
                                  ")");
        }
      }
    }
  }
}

MonoidPresentation truncated_addition_monoid(std::size_t top) {
  MonoidPresentation m;
  for (std::size_t i = 0; i <= top; ++i) m.elements.push_back(std::to_string(i));
  m.mult.assign(top + 1, std::vector<std::size_t>(top + 1));
  for (std::size_t a = 0; a <= top; ++a) {
    for (std::size_t b = 0; b <= top; ++b) m.mult[a][b] = std::min(a + b, top);
  }
  m.unit = 0;
  return m;
}

MonoidPresentation cyclic_group(std::size_t n) {
  MonoidPresentation m;
  for (std::size_t i = 0; i < n; ++i) m.elements.push_back(std::to_string(i));
  m.mult.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) m.mult[a][b] = (a + b) % n;
  }
  m.unit = 0;
  return m;
}

MonoidPresentation trivial_monoid() {
  MonoidPresentation m;
  m.elements = {"e"};
  m.mult = {{0}};
  m.unit = 0;
  return m;
}

std::shared_ptr<TableFragment> monoid_bicat(const MonoidPresentation& m) {
  m.validate();
  const std::size_t n = m.elements.size();
  TableFragment::Tables t;
  t.objects = {"*"};
  for (std::size_t i = 0; i < n; ++i) {
    t.one_cells.push_back({m.elements[i], 0, 0});
    t.two_cells.push_back({"1_" + m.elements[i], i, i});
    t.identity_two.push_back(i);
  }
  t.identity_one = {m.unit};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.hcomp_one[{a, b}] = m.mult[a][b];
      t.hcomp_two[{a, b}] = m.mult[a][b];
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    t.left_unitors[a] = {a, a};
    t.right_unitors[a] = {a, a};
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t abc = m.mult[m.mult[a][b]][c];
        t.associators[{a, b, c}] = {abc, abc};
      }
    }
  }
  return std::make_shared<TableFragment>(std::move(t));
}

}  // namespace spanbicat
