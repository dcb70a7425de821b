#include "spanbicat/bicat.hpp"

#include <algorithm>

namespace spanbicat {

std::vector<ObjectId> BicatFragment::objects() const {
  std::vector<ObjectId> out(object_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<ObjectId>(i);
  return out;
}

std::optional<TwoCell> whisker_left(const BicatFragment& b, OneCell a, const TwoCell& beta) {
  return b.hcomp(b.identity(a), beta);
}

std::optional<TwoCell> whisker_right(const BicatFragment& b, const TwoCell& alpha, OneCell c) {
  return b.hcomp(alpha, b.identity(c));
}

std::optional<TwoCell> vcomp_chain(const BicatFragment& b, std::initializer_list<std::optional<TwoCell>> cells) {
  std::optional<TwoCell> acc;
  for (const auto& c : cells) {
    if (!c) return std::nullopt;
    acc = acc ? b.vcomp(*acc, *c) : *c;
  }
  return acc;
}

std::optional<TwoCell> find_inverse(const BicatFragment& b, const TwoCell& alpha) {
  const TwoCell id_src = b.identity(alpha.src);
  const TwoCell id_tgt = b.identity(alpha.tgt);
  for (const TwoCell& beta : b.two_cells(alpha.tgt, alpha.src)) {
    if (b.vcomp(alpha, beta) == id_src && b.vcomp(beta, alpha) == id_tgt) return beta;
  }
  return std::nullopt;
}

bool is_invertible(const BicatFragment& b, const TwoCell& alpha) { return find_inverse(b, alpha).has_value(); }

std::optional<TwoCell> find_invertible(const BicatFragment& b, OneCell a, OneCell c) {
  for (const TwoCell& t : b.two_cells(a, c)) {
    if (is_invertible(b, t)) return t;
  }
  return std::nullopt;
}

std::vector<OneCell> all_base_cells(const BicatFragment& b) {
  std::vector<OneCell> out;
  for (ObjectId x : b.objects()) {
    for (ObjectId z : b.objects()) {
      auto cells = b.one_cells(x, z);
      out.insert(out.end(), cells.begin(), cells.end());
    }
  }
  return out;
}

OneCell require(const std::optional<OneCell>& a, std::string_view what) {
  if (!a) throw FragmentIncomplete("composite outside fragment: " + std::string(what));
  return *a;
}

TwoCell require(const std::optional<TwoCell>& a, std::string_view what) {
  if (!a) throw FragmentIncomplete("2-cell outside fragment: " + std::string(what));
  return *a;
}

nlohmann::json cell_json(const BicatFragment& b, OneCell a) { return b.name(a); }

nlohmann::json cell_json(const BicatFragment& b, const TwoCell& alpha) {
  return nlohmann::json{{"src", b.name(alpha.src)}, {"tgt", b.name(alpha.tgt)}, {"cell", b.name(alpha)}};
}

std::vector<Element> enumerate_2cells_into_composites(const BicatFragment& b, OneCell c, ObjectId y) {
  std::vector<Element> out;
  const ObjectId x = b.source(c), z = b.target(c);
  for (OneCell a : b.one_cells(x, y)) {
    for (OneCell r : b.one_cells(y, z)) {
      std::optional<OneCell> ar = b.hcomp(a, r);
      if (!ar) {
        throw FragmentIncomplete("composite " + b.name(a) + " ; " + b.name(r) + " lies outside the fragment");
      }
      for (const TwoCell& g : b.two_cells(c, *ar)) out.push_back(Element{a, r, g});
    }
  }
  return out;
}

nlohmann::json element_json(const BicatFragment& b, const Element& e) {
  return nlohmann::json{{"left", b.name(e.left)}, {"right", b.name(e.right)}, {"cell", b.name(e.cell)}};
}

std::vector<std::vector<OneCell>> iso_classes(const BicatFragment& b, const std::vector<OneCell>& cells) {
  std::vector<std::vector<OneCell>> classes;
  for (OneCell a : cells) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](const std::vector<OneCell>& cls) {
      return find_invertible(b, cls.front(), a).has_value();
    });
    if (it == classes.end()) {
      classes.push_back({a});
    } else {
      it->push_back(a);
    }
  }
  return classes;
}

OneCell one_cell_named(const BicatFragment& b, const std::string& name) {
  auto a = b.parse_one_cell(name);
  if (!a) throw FixtureError("unknown 1-cell '" + name + "'");
  return *a;
}

TwoCell two_cell_named(const BicatFragment& b, OneCell src, OneCell tgt, const std::string& name) {
  auto t = b.parse_two_cell(src, tgt, name);
  if (!t) throw FixtureError("unknown 2-cell '" + name + "' from " + b.name(src) + " to " + b.name(tgt));
  return *t;
}

Element element_from_json(const BicatFragment& b, const nlohmann::json& j) {
  try {
    OneCell c = one_cell_named(b, j.at("source").get<std::string>());
    OneCell l = one_cell_named(b, j.at("left").get<std::string>());
    OneCell r = one_cell_named(b, j.at("right").get<std::string>());
    auto lr = b.hcomp(l, r);
    if (!lr) throw FixtureError("composite " + b.name(l) + " ; " + b.name(r) + " is outside the fragment");
    return Element{l, r, two_cell_named(b, c, *lr, j.at("cell").get<std::string>())};
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError(std::string("malformed element: ") + e.what());
  }
}

}  // namespace spanbicat
