#include "spanbicat/adjunction.hpp"

#include "spanbicat/parallel.hpp"

namespace spanbicat {

std::optional<bool> triangle_identities(const BicatFragment& b, const Adjunction& adj) {
  const OneCell f = adj.left, g = adj.right;
  auto fg = b.hcomp(f, g);
  auto gf = b.hcomp(g, f);
  if (!fg || !gf) return std::nullopt;
  auto left = vcomp_chain(b, {b.left_unitor_inverse(f), whisker_right(b, adj.unit, f), b.associator(f, g, f),
                              whisker_left(b, f, adj.counit), b.right_unitor(f)});
  auto right = vcomp_chain(b, {b.right_unitor_inverse(g), whisker_left(b, g, adj.unit), b.associator_inverse(g, f, g),
                               whisker_right(b, adj.counit, g), b.left_unitor(g)});
  if (!left || !right) return std::nullopt;
  return b.is_identity(*left) && b.is_identity(*right);
}

namespace {

template <class Fn>
void search(const BicatFragment& b, OneCell f, OneCell g, Fn&& found) {
  auto fg = b.hcomp(f, g);
  auto gf = b.hcomp(g, f);
  if (!fg || !gf) return;
  auto counits = b.two_cells(*gf, b.identity(b.target(f)));
  if (counits.empty()) return;
  for (const TwoCell& unit : b.two_cells(b.identity(b.source(f)), *fg)) {
    for (const TwoCell& counit : counits) {
      Adjunction adj{f, g, unit, counit};
      if (triangle_identities(b, adj).value_or(false) && found(adj)) return;
    }
  }
}

}  // namespace

std::optional<Adjunction> find_right_adjoint(const BicatFragment& b, OneCell f) {
  std::optional<Adjunction> out;
  for (OneCell g : b.one_cells(b.target(f), b.source(f))) {
    search(b, f, g, [&](const Adjunction& a) {
      out = a;
      return true;
    });
    if (out) break;
  }
  return out;
}

std::optional<Adjunction> find_left_adjoint(const BicatFragment& b, OneCell g) {
  std::optional<Adjunction> out;
  for (OneCell f : b.one_cells(b.target(g), b.source(g))) {
    search(b, f, g, [&](const Adjunction& a) {
      out = a;
      return true;
    });
    if (out) break;
  }
  return out;
}

std::vector<Adjunction> adjunctions_with_left(const BicatFragment& b, OneCell f) {
  std::vector<Adjunction> out;
  for (OneCell g : b.one_cells(b.target(f), b.source(f))) {
    search(b, f, g, [&](const Adjunction& a) {
      out.push_back(a);
      return false;
    });
  }
  return out;
}

std::optional<TwoCell> mate(const BicatFragment& b, const TwoCell& alpha, const Adjunction& adj1,
                            const Adjunction& adj2, OneCell p, OneCell q) {
  const OneCell f1 = adj1.left, g1 = adj1.right, f2 = adj2.left, g2 = adj2.right;
  auto pf2 = b.hcomp(p, f2);
  auto f1q = b.hcomp(f1, q);
  if (!pf2 || !f1q || alpha.src != *pf2 || alpha.tgt != *f1q) {
    throw CompositionError("mate: 2-cell does not fill the square p;f2 => f1;q");
  }
  auto g1p = b.hcomp(g1, p);
  auto g1f1 = b.hcomp(g1, f1);
  if (!g1p || !g1f1) return std::nullopt;
  try {
    return vcomp_chain(
        b, {b.right_unitor_inverse(*g1p), whisker_left(b, *g1p, adj2.unit), b.associator_inverse(*g1p, f2, g2),
            whisker_right(b, require(b.associator(g1, p, f2), "mate reassociation"), g2),
            whisker_right(b, require(whisker_left(b, g1, alpha), "mate whiskering"), g2),
            whisker_right(b, require(b.associator_inverse(g1, f1, q), "mate reassociation"), g2),
            whisker_right(b, require(whisker_right(b, adj1.counit, q), "mate counit"), g2),
            whisker_right(b, require(b.left_unitor(q), "mate unitor"), g2)});
  } catch (const FragmentIncomplete&) {
    return std::nullopt;
  }
}

std::optional<TwoCell> mate_inverse(const BicatFragment& b, const TwoCell& beta, const Adjunction& adj1,
                                    const Adjunction& adj2, OneCell p, OneCell q) {
  const OneCell f1 = adj1.left, g1 = adj1.right, f2 = adj2.left, g2 = adj2.right;
  auto g1p = b.hcomp(g1, p);
  auto qg2 = b.hcomp(q, g2);
  if (!g1p || !qg2 || beta.src != *g1p || beta.tgt != *qg2) {
    throw CompositionError("mate: 2-cell does not fill the square g1;p => q;g2");
  }
  auto pf2 = b.hcomp(p, f2);
  auto g2f2 = b.hcomp(g2, f2);
  if (!pf2 || !g2f2) return std::nullopt;
  try {
    return vcomp_chain(b, {b.left_unitor_inverse(*pf2), whisker_right(b, adj1.unit, *pf2), b.associator(f1, g1, *pf2),
                           whisker_left(b, f1, require(b.associator_inverse(g1, p, f2), "mate reassociation")),
                           whisker_left(b, f1, require(whisker_right(b, beta, f2), "mate whiskering")),
                           whisker_left(b, f1, require(b.associator(q, g2, f2), "mate reassociation")),
                           whisker_left(b, f1, require(whisker_left(b, q, adj2.counit), "mate counit")),
                           whisker_left(b, f1, require(b.right_unitor(q), "mate unitor"))});
  } catch (const FragmentIncomplete&) {
    return std::nullopt;
  }
}

AdjointIndex::AdjointIndex(const BicatFragment& b, unsigned jobs) : b_(b) {
  const auto cells = all_base_cells(b);
  std::vector<std::optional<Adjunction>> right(cells.size()), left(cells.size());
  parallel_for(cells.size(), jobs, [&](std::size_t i) {
    right[i] = find_right_adjoint(b, cells[i]);
    left[i] = find_left_adjoint(b, cells[i]);
  });
  for (std::size_t i = 0; i < cells.size(); ++i) {
    right_.emplace(cells[i], right[i]);
    left_.emplace(cells[i], left[i]);
  }
}

std::vector<OneCell> AdjointIndex::left_adjoints(ObjectId x, ObjectId y) const {
  std::vector<OneCell> out;
  for (OneCell f : b_.one_cells(x, y)) {
    if (is_left_adjoint(f)) out.push_back(f);
  }
  return out;
}

std::vector<OneCell> AdjointIndex::right_adjoints(ObjectId x, ObjectId y) const {
  std::vector<OneCell> out;
  for (OneCell g : b_.one_cells(x, y)) {
    if (is_right_adjoint(g)) out.push_back(g);
  }
  return out;
}

namespace {

template <class Fn>
Report scan_left_adjoint_pairs(const AdjointIndex& adj, const char* id, const CheckOptions& opts, Fn&& check) {
  const BicatFragment& b = adj.fragment();
  Report rep(id, b.scope());
  rep.max_witnesses = opts.max_witnesses;
  std::size_t left_adjoints = 0;
  for (ObjectId x : b.objects()) {
    for (ObjectId y : b.objects()) {
      auto ls = adj.left_adjoints(x, y);
      left_adjoints += ls.size();
      for (OneCell f1 : ls) {
        for (OneCell f2 : ls) {
          ++rep.instances;
          check(rep, f1, f2, b.two_cells(f1, f2));
        }
      }
    }
  }
  rep.details["left_adjoints"] = left_adjoints;
  return rep;
}

}  // namespace

Report check_left_adjoint_2cell_uniqueness(const AdjointIndex& adj, const CheckOptions& opts) {
  const BicatFragment& b = adj.fragment();
  return scan_left_adjoint_pairs(adj, "left-adjoint-2cell-uniqueness", opts,
                                 [&](Report& rep, OneCell f1, OneCell f2, const std::vector<TwoCell>& cells) {
                                   if (cells.size() <= 1) return;
                                   nlohmann::json w{
                                       {"from", b.name(f1)}, {"to", b.name(f2)}, {"cells", nlohmann::json::array()}};
                                   for (const TwoCell& t : cells) w["cells"].push_back(b.name(t));
                                   rep.violation(std::move(w));
                                 });
}

Report check_left_adjoint_2cell_invertibility(const AdjointIndex& adj, const CheckOptions& opts) {
  const BicatFragment& b = adj.fragment();
  return scan_left_adjoint_pairs(adj, "left-adjoint-2cell-invertibility", opts,
                                 [&](Report& rep, OneCell f1, OneCell f2, const std::vector<TwoCell>& cells) {
                                   for (const TwoCell& t : cells) {
                                     if (!find_inverse(b, t)) {
                                       rep.violation({{"from", b.name(f1)}, {"to", b.name(f2)}, {"cell", b.name(t)}});
                                     }
                                   }
                                 });
}

Report check_mates(const AdjointIndex& adj, const CheckOptions& opts) {
  const BicatFragment& b = adj.fragment();
  struct Frame {
    Adjunction adj1;
    Adjunction adj2;
  };
  std::vector<Frame> frames;
  for (ObjectId a : b.objects()) {
    for (ObjectId c : b.objects()) {
      for (OneCell f1 : adj.left_adjoints(a, c)) {
        for (ObjectId bb : b.objects()) {
          for (ObjectId d : b.objects()) {
            for (OneCell f2 : adj.left_adjoints(bb, d))
              frames.push_back({*adj.right_adjoint(f1), *adj.right_adjoint(f2)});
          }
        }
      }
    }
  }

  struct Tally {
    std::size_t instances = 0;
    std::size_t skipped = 0;
    std::vector<nlohmann::json> violations;
  };
  std::vector<Tally> tallies(frames.size());
  parallel_for(frames.size(), opts.jobs, [&](std::size_t i) {
    const auto& [adj1, adj2] = frames[i];
    Tally& t = tallies[i];
    const ObjectId a = b.source(adj1.left), c = b.target(adj1.left);
    const ObjectId bb = b.source(adj2.left), d = b.target(adj2.left);
    for (OneCell p : b.one_cells(a, bb)) {
      for (OneCell q : b.one_cells(c, d)) {
        auto pf2 = b.hcomp(p, adj2.left), f1q = b.hcomp(adj1.left, q);
        auto g1p = b.hcomp(adj1.right, p), qg2 = b.hcomp(q, adj2.right);
        if (!pf2 || !f1q || !g1p || !qg2) {
          ++t.skipped;
          continue;
        }
        auto fail = [&](const char* way, const TwoCell& cell) {
          t.violations.push_back({{"direction", way},
                                  {"cell", cell_json(b, cell)},
                                  {"left_adjoints", {b.name(adj1.left), b.name(adj2.left)}},
                                  {"p", b.name(p)},
                                  {"q", b.name(q)}});
        };
        for (const TwoCell& alpha : b.two_cells(*pf2, *f1q)) {
          ++t.instances;
          auto beta = mate(b, alpha, adj1, adj2, p, q);
          if (!beta) {
            ++t.skipped;
          } else if (mate_inverse(b, *beta, adj1, adj2, p, q) != alpha) {
            fail("mate then inverse", alpha);
          }
        }
        for (const TwoCell& beta : b.two_cells(*g1p, *qg2)) {
          ++t.instances;
          auto alpha = mate_inverse(b, beta, adj1, adj2, p, q);
          if (!alpha) {
            ++t.skipped;
          } else if (mate(b, *alpha, adj1, adj2, p, q) != beta) {
            fail("inverse then mate", beta);
          }
        }
      }
    }
  });

  Report rep("mates", b.scope());
  rep.max_witnesses = opts.max_witnesses;
  std::size_t skipped = 0;
  for (Tally& t : tallies) {
    rep.instances += t.instances;
    skipped += t.skipped;
    for (auto& v : t.violations) rep.violation(std::move(v));
  }
  rep.details["frames"] = frames.size();
  rep.details["skipped_outside_closure"] = skipped;
  return rep;
}

nlohmann::json adjunction_json(const BicatFragment& b, const Adjunction& adj) {
  return {{"left", b.name(adj.left)},
          {"right", b.name(adj.right)},
          {"unit", b.name(adj.unit)},
          {"counit", b.name(adj.counit)}};
}

}  // namespace spanbicat
