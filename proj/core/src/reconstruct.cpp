#include "spanbicat/reconstruct.hpp"

#include <set>

#include "spanbicat/axioms.hpp"
#include "spanbicat/generic.hpp"
#include "spanbicat/parallel.hpp"

namespace spanbicat {

LeftAdjointCategory::LeftAdjointCategory(const BicatFragment& b, const AdjointIndex& adj)
    : b_(b), report_("left-adjoint-category", b.scope()) {
  const auto objs = b.objects();
  const std::size_t n = objs.size();
  classes_.assign(n, std::vector<std::vector<std::vector<OneCell>>>(n));
  for (ObjectId x : objs) {
    for (ObjectId y : objs) {
      classes_[x][y] = iso_classes(b, adj.left_adjoints(x, y));
      for (std::size_t k = 0; k < classes_[x][y].size(); ++k) {
        for (OneCell f : classes_[x][y][k]) base_class_[f] = k;
      }
    }
  }

  identity_.assign(n, 0);
  for (ObjectId x : objs) {
    ++report_.instances;
    auto it = base_class_.find(b.identity(x));
    if (it == base_class_.end()) {
      report_.violation({{"law", "identity-is-left-adjoint"}, {"object", b.object_name(x)}});
      continue;
    }
    identity_[x] = it->second;
  }

  for (ObjectId x : objs) {
    for (ObjectId y : objs) {
      for (ObjectId z : objs) {
        for (std::size_t i = 0; i < hom_size(x, y); ++i) {
          for (std::size_t j = 0; j < hom_size(y, z); ++j) {
            std::optional<std::size_t> k;
            if (auto fg = b.hcomp(representative(x, y, i), representative(y, z, j))) k = classify(*fg);
            compose_[{x, y, z, i, j}] = k;
            ++report_.instances;
            if (!k) {
              report_.violation({{"law", "composite-classified"},
                                 {"left", b.name(representative(x, y, i))},
                                 {"right", b.name(representative(y, z, j))}});
              continue;
            }
            for (OneCell f : members(x, y, i)) {
              for (OneCell g : members(y, z, j)) {
                auto fg = b.hcomp(f, g);
                auto k2 = fg ? classify(*fg) : std::nullopt;
                if (k2 == k) continue;
                report_.violation({{"law", "composition-well-defined"}, {"left", b.name(f)}, {"right", b.name(g)}});
              }
            }
          }
        }
      }
    }
  }

  for (ObjectId x : objs) {
    for (ObjectId y : objs) {
      for (std::size_t i = 0; i < hom_size(x, y); ++i) {
        ++report_.instances;
        if (compose(x, x, y, identity_[x], i) != i || compose(x, y, y, i, identity_[y]) != i) {
          report_.violation({{"law", "unit"}, {"cell", b.name(representative(x, y, i))}});
        }
      }
    }
  }
  for (ObjectId w : objs) {
    for (ObjectId x : objs) {
      for (ObjectId y : objs) {
        for (ObjectId z : objs) {
          for (std::size_t i = 0; i < hom_size(w, x); ++i) {
            for (std::size_t j = 0; j < hom_size(x, y); ++j) {
              for (std::size_t k = 0; k < hom_size(y, z); ++k) {
                ++report_.instances;
                auto ij = compose(w, x, y, i, j);
                auto jk = compose(x, y, z, j, k);
                auto left = ij ? compose(w, y, z, *ij, k) : std::nullopt;
                auto right = jk ? compose(w, x, z, i, *jk) : std::nullopt;
                if (left && left == right) continue;
                report_.violation({{"law", "associativity"},
                                   {"cells",
                                    {b.name(representative(w, x, i)), b.name(representative(x, y, j)),
                                     b.name(representative(y, z, k))}}});
              }
            }
          }
        }
      }
    }
  }
  std::size_t morphisms = 0;
  for (ObjectId x : objs) {
    for (ObjectId y : objs) morphisms += hom_size(x, y);
  }
  report_.details["morphisms"] = morphisms;
}

std::optional<std::size_t> LeftAdjointCategory::classify(OneCell f) const {
  if (auto it = base_class_.find(f); it != base_class_.end()) return it->second;
  const ObjectId x = b_.source(f), y = b_.target(f);
  for (std::size_t k = 0; k < hom_size(x, y); ++k) {
    if (find_invertible(b_, representative(x, y, k), f)) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> LeftAdjointCategory::compose(ObjectId x, ObjectId y, ObjectId z, std::size_t i,
                                                        std::size_t j) const {
  auto it = compose_.find({x, y, z, i, j});
  if (it == compose_.end()) return std::nullopt;
  return it->second;
}

std::size_t LeftAdjointCategory::global_index(ObjectId x, ObjectId y, std::size_t k) const {
  std::size_t index = 0;
  for (ObjectId a = 0; a < classes_.size(); ++a) {
    for (ObjectId b = 0; b < classes_.size(); ++b) {
      if (a == x && b == y) return index + k;
      index += classes_[a][b].size();
    }
  }
  return index;
}

CategoryPresentation LeftAdjointCategory::presentation(
    const std::vector<CategoryPresentation::PullbackEntry>& pullbacks) const {
  CategoryPresentation p;
  const std::size_t n = classes_.size();
  for (ObjectId x = 0; x < n; ++x) p.objects.push_back(b_.object_name(x));
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      for (std::size_t k = 0; k < hom_size(x, y); ++k) {
        p.morphisms.push_back({b_.name(representative(x, y, k)), x, y});
      }
    }
  }
  for (ObjectId x = 0; x < n; ++x) p.identities.push_back(global_index(x, x, identity_[x]));
  for (const auto& [key, k] : compose_) {
    if (!k) continue;
    auto [x, y, z, i, j] = key;
    p.composition[{global_index(static_cast<ObjectId>(x), static_cast<ObjectId>(y), i),
                   global_index(static_cast<ObjectId>(y), static_cast<ObjectId>(z), j)}] =
        global_index(static_cast<ObjectId>(x), static_cast<ObjectId>(z), *k);
  }
  p.pullbacks = pullbacks;
  return p;
}

Reconstruction::Reconstruction(const Analyzer& an, const AdjointIndex& adj,
                               const std::vector<InitialGenericWitness>& witnesses, const ReconstructionGates& gates)
    : an_(an), adj_(adj) {
  for (const Report* g : gates.all()) {
    if (g->passed()) continue;
    std::string detail = to_string(g->status);
    if (!g->witnesses.empty()) detail += " with witness " + g->witnesses.front().dump();
    throw GateFailure(g->id, detail);
  }
  for (const auto& w : witnesses) chosen_.emplace(w.cell, w);
  e_ = std::make_unique<LeftAdjointCategory>(an.fragment(), adj);
  if (!e_->report().passed()) {
    throw GateFailure(e_->report().id, e_->report().witnesses.empty() ? "" : e_->report().witnesses.front().dump());
  }
}

std::optional<ESpan> Reconstruction::image(OneCell c) const {
  auto it = chosen_.find(c);
  if (it == chosen_.end()) return std::nullopt;
  const Element& d = it->second.delta;
  const auto& ladj = adj_.left_adjoint(d.left);
  if (!ladj) return std::nullopt;
  auto l = e_->classify(ladj->left);
  auto r = e_->classify(d.right);
  if (!l || !r) return std::nullopt;
  return ESpan{it->second.middle, *l, *r};
}

std::vector<ESpan> Reconstruction::spans(ObjectId x, ObjectId z) const {
  std::vector<ESpan> out;
  for (ObjectId t : fragment().objects()) {
    for (std::size_t i = 0; i < e_->hom_size(t, x); ++i) {
      for (std::size_t j = 0; j < e_->hom_size(t, z); ++j) out.push_back(ESpan{t, i, j});
    }
  }
  return out;
}

std::vector<std::size_t> Reconstruction::span_morphisms(ObjectId x, ObjectId z, const ESpan& from,
                                                        const ESpan& to) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < e_->hom_size(from.apex, to.apex); ++k) {
    if (e_->compose(from.apex, to.apex, x, k, to.left) == from.left &&
        e_->compose(from.apex, to.apex, z, k, to.right) == from.right) {
      out.push_back(k);
    }
  }
  return out;
}

std::optional<OneCell> Reconstruction::realize(ObjectId x, ObjectId z, const ESpan& s) const {
  const auto& radj = adj_.right_adjoint(e_->representative(s.apex, x, s.left));
  if (!radj) return std::nullopt;
  return fragment().hcomp(radj->right, e_->representative(s.apex, z, s.right));
}

namespace {

nlohmann::json espan_json(const Reconstruction& r, ObjectId x, ObjectId z, const ESpan& s) {
  const BicatFragment& b = r.fragment();
  const LeftAdjointCategory& e = r.category();
  return {{"apex", b.object_name(s.apex)},
          {"left", b.name(e.representative(s.apex, x, s.left))},
          {"right", b.name(e.representative(s.apex, z, s.right))}};
}

Adjunction identity_adjunction(const BicatFragment& b, ObjectId z) {
  OneCell one = b.identity(z);
  return Adjunction{one, one, require(b.left_unitor_inverse(one), "unitor on an identity"),
                    require(b.left_unitor(one), "unitor on an identity")};
}

}  // namespace

HomFunctorData build_hom_functor(const Reconstruction& r, ObjectId x, ObjectId z, const CheckOptions& opts) {
  const BicatFragment& b = r.fragment();
  const Analyzer& an = r.analyzer();
  const LeftAdjointCategory& e = r.category();
  HomFunctorData f;
  f.x = x;
  f.z = z;
  f.report = Report("hom-functor", b.scope());
  f.report.max_witnesses = opts.max_witnesses;
  f.report.scope["hom"] = {b.object_name(x), b.object_name(z)};
  Report& rep = f.report;
  const auto cells = b.one_cells(x, z);

  for (OneCell c : cells) {
    ++rep.instances;
    if (auto img = r.image(c)) {
      f.on_cells.emplace(c, *img);
    } else {
      rep.violation({{"check", "image"}, {"cell", b.name(c)}});
    }
  }

  std::map<TwoCell, std::size_t> index;
  try {
    for (OneCell c : cells) {
      if (!f.on_cells.contains(c)) continue;
      const Element& d = r.chosen(c).delta;
      const ESpan& sc = f.on_cells.at(c);
      const Adjunction& ladj = *r.adjoints().left_adjoint(d.left);
      for (OneCell c2 : cells) {
        if (!f.on_cells.contains(c2)) continue;
        const Element& d2 = r.chosen(c2).delta;
        const ESpan& sc2 = f.on_cells.at(c2);
        const Adjunction& ladj2 = *r.adjoints().left_adjoint(d2.left);
        for (const TwoCell& alpha : b.two_cells(c, c2)) {
          ++rep.instances;
          auto fac = an.factor(d, Element{d2.left, d2.right, b.vcomp(alpha, d2.cell)});
          if (!fac) {
            rep.violation({{"check", "factorization"}, {"cell", b.name(alpha)}});
            continue;
          }
          const OneCell h = fac->eta.left, k = fac->eta.right;
          auto hc = e.classify(h);
          if (!hc) {
            rep.violation({{"check", "h-is-left-adjoint"}, {"cell", b.name(alpha)}, {"h", b.name(h)}});
            continue;
          }
          // r => h;r' from η and φ, and h;l'_* => l_* as the mate of θ.
          auto rho = vcomp_chain(b, {b.left_unitor_inverse(d.right), whisker_right(b, fac->eta.cell, d.right),
                                     b.associator(h, k, d.right), whisker_left(b, h, fac->beta)});
          auto theta = vcomp_chain(b, {fac->alpha, b.left_unitor_inverse(d2.left)});
          std::optional<TwoCell> lambda;
          if (theta) {
            auto m = mate_inverse(b, *theta, ladj, ladj2, h, b.identity(x));
            if (m) lambda = vcomp_chain(b, {m, b.right_unitor(ladj.left)});
          }
          bool equations = e.compose(sc.apex, sc2.apex, x, *hc, sc2.left) == sc.left &&
                           e.compose(sc.apex, sc2.apex, z, *hc, sc2.right) == sc.right;
          bool cells_ok = rho && lambda && an.inverse(*rho) && an.inverse(*lambda);
          if (!equations || !cells_ok) {
            rep.violation({{"check", "span-morphism"},
                           {"cell", b.name(alpha)},
                           {"h", b.name(h)},
                           {"equations", equations},
                           {"invertible_comparisons", cells_ok}});
            continue;
          }
          index[alpha] = f.on_two_cells.size();
          f.on_two_cells.push_back(HomFunctorEntry{alpha, *fac, *hc});
        }
      }
    }

    for (OneCell c : cells) {
      if (!f.on_cells.contains(c)) continue;
      ++rep.instances;
      const ESpan& sc = f.on_cells.at(c);
      auto it = index.find(b.identity(c));
      if (it == index.end() || f.on_two_cells[it->second].h_class != e.identity(sc.apex)) {
        rep.violation({{"check", "preserves-identity"}, {"cell", b.name(c)}});
      }
    }
    for (const auto& a : f.on_two_cells) {
      const ESpan& s1 = f.on_cells.at(a.alpha.src);
      const ESpan& s2 = f.on_cells.at(a.alpha.tgt);
      for (OneCell c3 : cells) {
        if (!f.on_cells.contains(c3)) continue;
        const ESpan& s3 = f.on_cells.at(c3);
        for (const TwoCell& beta : b.two_cells(a.alpha.tgt, c3)) {
          ++rep.instances;
          auto ib = index.find(beta);
          auto iab = index.find(b.vcomp(a.alpha, beta));
          if (ib != index.end() && iab != index.end() &&
              e.compose(s1.apex, s2.apex, s3.apex, a.h_class, f.on_two_cells[ib->second].h_class) ==
                  f.on_two_cells[iab->second].h_class) {
            continue;
          }
          rep.violation({{"check", "preserves-composition"}, {"first", b.name(a.alpha)}, {"second", b.name(beta)}});
        }
      }
    }
  } catch (const FragmentIncomplete& ex) {
    rep.incomplete(ex.what());
  }
  rep.details["two_cells"] = f.on_two_cells.size();
  return f;
}

Report check_hom_equivalence(const Reconstruction& r, const HomFunctorData& f, const CheckOptions& opts) {
  const BicatFragment& b = r.fragment();
  const Analyzer& an = r.analyzer();
  const LeftAdjointCategory& e = r.category();
  const ObjectId x = f.x, z = f.z;
  Report rep("hom-equivalence", b.scope());
  rep.max_witnesses = opts.max_witnesses;
  rep.scope["hom"] = {b.object_name(x), b.object_name(z)};
  const auto cells = b.one_cells(x, z);

  std::map<TwoCell, std::size_t> classes;
  for (const auto& a : f.on_two_cells) classes[a.alpha] = a.h_class;

  std::size_t faithful = 0, full = 0, mates = 0, surjective = 0;
  try {
    for (OneCell c : cells) {
      if (!f.on_cells.contains(c)) continue;
      const Element& d = r.chosen(c).delta;
      const ESpan& sc = f.on_cells.at(c);
      const Adjunction& ladj = *r.adjoints().left_adjoint(d.left);
      for (OneCell c2 : cells) {
        if (!f.on_cells.contains(c2)) continue;
        const Element& d2 = r.chosen(c2).delta;
        const ESpan& sc2 = f.on_cells.at(c2);
        const Adjunction& ladj2 = *r.adjoints().left_adjoint(d2.left);
        ++rep.instances;

        std::map<std::size_t, TwoCell> forward;
        bool injective = true;
        for (const TwoCell& alpha : b.two_cells(c, c2)) {
          auto it = classes.find(alpha);
          if (it == classes.end() || !forward.emplace(it->second, alpha).second) injective = false;
        }
        auto morphisms = r.span_morphisms(x, z, sc, sc2);
        std::set<std::size_t> expected(morphisms.begin(), morphisms.end()), image;
        for (const auto& [k, alpha] : forward) image.insert(k);
        ++faithful;
        ++full;
        if (!injective || image != expected) {
          rep.violation({{"check", injective ? "full" : "faithful"},
                         {"from", b.name(c)},
                         {"to", b.name(c2)},
                         {"span_morphisms", expected.size()},
                         {"two_cells", b.two_cells(c, c2).size()}});
          continue;
        }

        // Inverse through mates: rebuild (θ, η, φ) from [h] and paste.
        for (std::size_t k : morphisms) {
          ++mates;
          const OneCell h = e.representative(sc.apex, sc2.apex, k);
          const auto& hadj = r.adjoints().right_adjoint(h);
          auto hr2 = b.hcomp(h, d2.right);
          auto hl2 = b.hcomp(h, ladj2.left);
          std::optional<TwoCell> rebuilt;
          if (hadj && hr2 && hl2) {
            auto rho = find_invertible(b, d.right, *hr2);
            auto lambda = find_invertible(b, *hl2, ladj.left);
            if (rho && lambda) {
              auto phi_m = mate(b, require(vcomp_chain(b, {b.right_unitor(d.right), rho}), "r;1 => h;r'"), *hadj,
                                identity_adjunction(b, z), d.right, d2.right);
              auto theta_m =
                  mate(b, require(vcomp_chain(b, {lambda, b.right_unitor_inverse(ladj.left)}), "h;l'_* => l_*;1"), ladj,
                       ladj2, h, b.identity(x));
              auto phi = vcomp_chain(b, {phi_m, b.right_unitor(d2.right)});
              auto theta = vcomp_chain(b, {theta_m, b.left_unitor(d2.left)});
              if (phi && theta) {
                Element pasted = an.paste(d, Element{h, hadj->right, hadj->unit});
                rebuilt = vcomp_chain(b, {pasted.cell, b.hcomp(*theta, *phi), r.chosen(c2).delta_inverse});
              }
            }
          }
          auto back = rebuilt ? forward.find(k) : forward.end();
          if (!rebuilt || back == forward.end() || back->second != *rebuilt) {
            rep.violation({{"check", "mates-inverse"}, {"from", b.name(c)}, {"to", b.name(c2)}, {"h", b.name(h)}});
          }
        }
      }
    }

    for (const ESpan& s : r.spans(x, z)) {
      ++rep.instances;
      ++surjective;
      auto d = r.realize(x, z, s);
      std::optional<OneCell> found;
      std::optional<TwoCell> iota;
      if (d) {
        for (OneCell c : cells) {
          if (!f.on_cells.contains(c)) continue;
          if ((iota = find_invertible(b, c, *d))) {
            found = c;
            break;
          }
        }
      }
      if (!found) {
        rep.violation({{"check", "essentially-surjective"}, {"missing", espan_json(r, x, z, s)}});
        continue;
      }
      // Comparisons both ways between the chosen l;r and s*;t.
      const auto& w = r.chosen(*found);
      const ESpan& sc = f.on_cells.at(*found);
      const OneCell sstar = r.adjoints().right_adjoint(e.representative(s.apex, x, s.left))->right;
      const OneCell t = e.representative(s.apex, z, s.right);
      auto top = an.factor(w.delta, Element{sstar, t, *iota});
      auto inv = an.inverse(*iota);
      std::optional<Factorization> bottom;
      if (inv) {
        bottom = an.factor(Element{sstar, t, b.identity(*d)},
                           Element{w.delta.left, w.delta.right, b.vcomp(*inv, w.delta.cell)});
      }
      std::optional<std::size_t> h1, h2;
      if (top) h1 = e.classify(top->eta.left);
      if (bottom) h2 = e.classify(bottom->eta.left);
      bool ok = h1 && h2 && e.compose(sc.apex, s.apex, sc.apex, *h1, *h2) == e.identity(sc.apex) &&
                e.compose(s.apex, sc.apex, s.apex, *h2, *h1) == e.identity(s.apex) &&
                e.compose(sc.apex, s.apex, x, *h1, s.left) == sc.left &&
                e.compose(sc.apex, s.apex, z, *h1, s.right) == sc.right;
      if (!ok) {
        rep.violation(
            {{"check", "comparison-isomorphism"}, {"span", espan_json(r, x, z, s)}, {"cell", b.name(*found)}});
      }
    }
  } catch (const FragmentIncomplete& ex) {
    rep.incomplete(ex.what());
  }
  rep.details["faithful_pairs"] = faithful;
  rep.details["full_pairs"] = full;
  rep.details["mates_inverses"] = mates;
  rep.details["spans"] = surjective;
  return rep;
}

namespace {

struct ConePair {
  std::size_t x = 0;
  std::size_t y = 0;
  friend auto operator<=>(const ConePair&, const ConePair&) = default;
};

class PullbackScan {
 public:
  PullbackScan(const Reconstruction& r, Report& rep)
      : r_(r), b_(r.fragment()), an_(r.analyzer()), e_(r.category()), rep_(rep) {}

  // A base cell isomorphic to a derived one, with the comparison u => base.
  std::optional<std::pair<OneCell, TwoCell>> to_base(OneCell u) {
    auto it = base_.find(u);
    if (it != base_.end()) return it->second;
    std::optional<std::pair<OneCell, TwoCell>> out;
    for (OneCell a : b_.one_cells(b_.source(u), b_.target(u))) {
      if (auto iso = find_invertible(b_, u, a)) {
        out = std::make_pair(a, *iso);
        break;
      }
    }
    base_.emplace(u, out);
    return out;
  }

  // The class of h' in the factorization of θ: s;h' => a*;b through (s, h', id),
  // with a*;b given by its legs.
  std::optional<std::size_t> leg_class(OneCell s, OneCell hleg, OneCell astar, OneCell bleg, const TwoCell& theta) {
    auto sh = b_.hcomp(s, hleg);
    if (!sh) return std::nullopt;
    auto fac = an_.factor(Element{s, hleg, b_.identity(*sh)}, Element{astar, bleg, theta});
    if (!fac) return std::nullopt;
    return e_.classify(fac->eta.left);
  }

  const Reconstruction& r_;
  const BicatFragment& b_;
  const Analyzer& an_;
  const LeftAdjointCategory& e_;
  Report& rep_;
  std::map<OneCell, std::optional<std::pair<OneCell, TwoCell>>> base_;
};

}  // namespace

PullbackCheck check_composition_is_pullback(const Reconstruction& r, const ClassFunction& as_function,
                                            const CheckOptions& opts) {
  const BicatFragment& b = r.fragment();
  const Analyzer& an = r.analyzer();
  const LeftAdjointCategory& e = r.category();
  PullbackCheck out{Report("composition-is-pullback", b.scope()), {}};
  Report& rep = out.report;
  rep.max_witnesses = opts.max_witnesses;
  PullbackScan scan(r, rep);
  const auto objs = b.objects();

  std::size_t pairs = 0, bijections = 0, naturality = 0, extracted = 0, apex_outside = 0, skipped = 0;
  std::set<std::pair<std::size_t, std::size_t>> recorded;

  auto right_adjoint_of = [&](ObjectId apex, ObjectId x, std::size_t cls) {
    return r.adjoints().right_adjoint(e.representative(apex, x, cls))->right;
  };

  try {
    for (ObjectId x : objs) {
      for (ObjectId y : objs) {
        for (ObjectId z : objs) {
          const auto tests = r.spans(x, z);
          std::vector<std::optional<OneCell>> realized;
          for (const ESpan& s : tests) realized.push_back(r.realize(x, z, s));

          for (const ESpan& us : r.spans(x, y)) {
            for (const ESpan& vs : r.spans(y, z)) {
              ++pairs;
              const ObjectId P = us.apex, Q = vs.apex;
              const OneCell astar = right_adjoint_of(P, x, us.left), bleg = e.representative(P, y, us.right);
              const OneCell cstar = right_adjoint_of(Q, y, vs.left), dleg = e.representative(Q, z, vs.right);
              auto u = b.hcomp(astar, bleg), v = b.hcomp(cstar, dleg);
              auto w = (u && v) ? b.hcomp(*u, *v) : std::nullopt;
              auto ub = u ? scan.to_base(*u) : std::nullopt;
              auto vb = v ? scan.to_base(*v) : std::nullopt;
              if (!w || !ub || !vb) {
                ++skipped;
                continue;
              }
              auto iu = an.inverse(ub->second), iv = an.inverse(vb->second);
              auto to_base_cell = b.hcomp(ub->second, vb->second);

              // cone_of(τ, σ): the cone over (b, c) corresponding to σ: s*;t => w.
              auto cone_of = [&](std::size_t ti, const TwoCell& sigma) -> std::optional<ConePair> {
                const ESpan& ts = tests[ti];
                const OneCell sstar = right_adjoint_of(ts.apex, x, ts.left);
                const OneCell t = e.representative(ts.apex, z, ts.right);
                Element gamma{ub->first, vb->first, b.vcomp(sigma, *to_base_cell)};
                auto fac = an.factor(Element{sstar, t, b.identity(*realized[ti])}, gamma);
                if (!fac) return std::nullopt;
                auto cx = scan.leg_class(sstar, fac->eta.left, astar, bleg, b.vcomp(fac->alpha, *iu));
                auto cy = scan.leg_class(fac->eta.right, t, cstar, dleg, b.vcomp(fac->beta, *iv));
                if (!cx || !cy) return std::nullopt;
                return ConePair{*cx, *cy};
              };

              std::vector<std::map<TwoCell, ConePair>> maps(tests.size());
              for (std::size_t ti = 0; ti < tests.size(); ++ti) {
                const ESpan& ts = tests[ti];
                ++bijections;
                ++rep.instances;
                std::set<ConePair> cones;
                for (std::size_t cx = 0; cx < e.hom_size(ts.apex, P); ++cx) {
                  for (std::size_t cy = 0; cy < e.hom_size(ts.apex, Q); ++cy) {
                    auto xb = e.compose(ts.apex, P, y, cx, us.right);
                    if (xb && xb == e.compose(ts.apex, Q, y, cy, vs.left) &&
                        e.compose(ts.apex, P, x, cx, us.left) == ts.left &&
                        e.compose(ts.apex, Q, z, cy, vs.right) == ts.right) {
                      cones.insert(ConePair{cx, cy});
                    }
                  }
                }
                std::set<ConePair> image;
                bool ok = realized[ti].has_value();
                if (ok) {
                  auto sigmas = b.two_cells(*realized[ti], *w);
                  for (const TwoCell& sigma : sigmas) {
                    auto cone = cone_of(ti, sigma);
                    if (!cone || !image.insert(*cone).second) {
                      ok = false;
                      break;
                    }
                    maps[ti].emplace(sigma, *cone);
                  }
                  ok = ok && image == cones;
                }
                if (!ok) {
                  rep.violation({{"check", "cone-bijection"},
                                 {"first", espan_json(r, x, y, us)},
                                 {"second", espan_json(r, y, z, vs)},
                                 {"test", espan_json(r, x, z, ts)},
                                 {"cones", cones.size()},
                                 {"two_cells", maps[ti].size()}});
                }
              }

              // Naturality in the test span: precomposing σ with the 2-cell of
              // class g acts on cones by g;-.
              for (std::size_t t1 = 0; t1 < tests.size(); ++t1) {
                if (!realized[t1]) continue;
                for (std::size_t t2 = 0; t2 < tests.size(); ++t2) {
                  if (!realized[t2] || maps[t2].empty()) continue;
                  const ESpan &s1 = tests[t1], &s2 = tests[t2];
                  const OneCell s1star = right_adjoint_of(s1.apex, x, s1.left);
                  const OneCell t1leg = e.representative(s1.apex, z, s1.right);
                  const OneCell s2star = right_adjoint_of(s2.apex, x, s2.left);
                  const OneCell t2leg = e.representative(s2.apex, z, s2.right);
                  std::set<std::size_t> done;
                  for (const TwoCell& tau : b.two_cells(*realized[t1], *realized[t2])) {
                    auto fac =
                        an.factor(Element{s1star, t1leg, b.identity(*realized[t1])}, Element{s2star, t2leg, tau});
                    auto g = fac ? e.classify(fac->eta.left) : std::nullopt;
                    if (!g || !done.insert(*g).second) continue;
                    for (const auto& [sigma, cone] : maps[t2]) {
                      ++naturality;
                      ++rep.instances;
                      auto moved = maps[t1].find(b.vcomp(tau, sigma));
                      ConePair expect{*e.compose(s1.apex, s2.apex, P, *g, cone.x),
                                      *e.compose(s1.apex, s2.apex, Q, *g, cone.y)};
                      if (moved != maps[t1].end() && moved->second == expect) continue;
                      rep.violation({{"check", "naturality"},
                                     {"first", espan_json(r, x, y, us)},
                                     {"second", espan_json(r, y, z, vs)},
                                     {"from", espan_json(r, x, z, s1)},
                                     {"to", espan_json(r, x, z, s2)}});
                    }
                  }
                }
              }

              // Limiting cone: a test span isomorphic to the composite.
              const std::size_t fb = e.global_index(P, y, us.right), gc = e.global_index(Q, y, vs.left);
              std::optional<PullbackResult> pb;
              if (as_function) pb = pullback(as_function(P, y, us.right), as_function(Q, y, vs.left));
              std::optional<ConePair> limit;
              ObjectId M = 0;
              for (std::size_t i = 0; i < tests.size() && !limit; ++i) {
                for (const auto& [sigma, cone] : maps[i]) {
                  if (!an.inverse(sigma)) continue;
                  limit = cone;
                  M = tests[i].apex;
                  break;
                }
              }
              ++rep.instances;
              if (!limit) {
                ++apex_outside;
                bool apex_listed = false;
                if (pb) {
                  for (ObjectId o : objs) {
                    if (as_function(o, o, e.identity(o)).dom().size == pb->apex.size) apex_listed = true;
                  }
                }
                if (apex_listed) {
                  rep.violation({{"check", "limiting-cone"},
                                 {"first", espan_json(r, x, y, us)},
                                 {"second", espan_json(r, y, z, vs)}});
                }
                continue;
              }
              // Universal among cones in E.
              bool universal = true;
              for (ObjectId t : objs) {
                for (std::size_t cx = 0; cx < e.hom_size(t, P); ++cx) {
                  for (std::size_t cy = 0; cy < e.hom_size(t, Q); ++cy) {
                    auto xb = e.compose(t, P, y, cx, us.right);
                    if (!xb || xb != e.compose(t, Q, y, cy, vs.left)) continue;
                    std::size_t mediators = 0;
                    for (std::size_t m = 0; m < e.hom_size(t, M); ++m) {
                      if (e.compose(t, M, P, m, limit->x) == cx && e.compose(t, M, Q, m, limit->y) == cy) {
                        ++mediators;
                      }
                    }
                    if (mediators != 1) universal = false;
                  }
                }
              }
              bool canonical = true;
              if (pb) {
                FinFunction px = as_function(M, P, limit->x), py = as_function(M, Q, limit->y);
                try {
                  canonical = px.dom().size == pb->apex.size && is_bijection(pullback_mediator(*pb, px, py));
                } catch (const NoMediatorError&) {
                  canonical = false;
                }
              }
              if (!universal || !canonical) {
                rep.violation({{"check", "limiting-cone"},
                               {"first", espan_json(r, x, y, us)},
                               {"second", espan_json(r, y, z, vs)},
                               {"universal", universal},
                               {"matches_canonical_pullback", canonical}});
                continue;
              }
              ++extracted;
              if (recorded.insert({fb, gc}).second) {
                out.pullbacks.push_back(CategoryPresentation::PullbackEntry{fb, gc, M, e.global_index(M, P, limit->x),
                                                                            e.global_index(M, Q, limit->y)});
              }
            }
          }
        }
      }
    }
  } catch (const FragmentIncomplete& ex) {
    rep.incomplete(ex.what());
  }
  rep.details["span_pairs"] = pairs;
  rep.details["bijections"] = bijections;
  rep.details["naturality_instances"] = naturality;
  rep.details["limiting_cones"] = extracted;
  rep.details["apex_outside_objects"] = apex_outside;
  rep.details["skipped_outside_closure"] = skipped;
  rep.details["cospans_with_pullback"] = recorded.size();
  return out;
}

ReconstructionGates run_gates(const Analyzer& an, const AdjointIndex& adj,
                              std::vector<InitialGenericWitness>* witnesses, const CheckOptions& opts) {
  ReconstructionGates g;
  g.generic = is_generic_bicategory(an, opts);
  Axiom1Result a1 = check_axiom1(an, opts);
  g.axiom1 = a1.report;
  g.axiom2 = check_axiom2(an, a1.witnesses, opts);
  g.uniqueness = check_left_adjoint_2cell_uniqueness(adj, opts);
  g.invertibility = check_left_adjoint_2cell_invertibility(adj, opts);
  if (witnesses) *witnesses = std::move(a1.witnesses);
  return g;
}

bool RoundtripResult::passed() const {
  if (!category) return false;
  for (const auto& r : reports) {
    if (!r.passed()) return false;
  }
  return true;
}

RoundtripResult reconstruct_fragment(const BicatFragment& b, const CheckOptions& opts,
                                     const ClassFunction& as_function) {
  RoundtripResult out;
  Analyzer an(b, opts.jobs);
  AdjointIndex adj(b, opts.jobs);
  std::vector<InitialGenericWitness> witnesses;
  ReconstructionGates gates = run_gates(an, adj, &witnesses, opts);

  Report gate("reconstruction-gates", b.scope());
  for (const Report* g : gates.all()) {
    ++gate.instances;
    gate.details[g->id] = to_string(g->status);
  }
  std::unique_ptr<Reconstruction> rec;
  try {
    rec = std::make_unique<Reconstruction>(an, adj, witnesses, gates);
  } catch (const GateFailure& e) {
    gate.violation({{"gate", e.gate()}, {"reason", e.what()}});
    for (const Report* g : gates.all()) {
      if (g->id == e.gate()) gate.details["failed_gate"] = g->to_json();
    }
    if (e.gate() == "left-adjoint-category") {
      LeftAdjointCategory e2(b, adj);
      gate.details["failed_gate"] = e2.report().to_json();
    }
    out.reports.push_back(std::move(gate));
    return out;
  }
  out.reports.push_back(std::move(gate));
  out.reports.push_back(rec->category().report());

  for (ObjectId x : b.objects()) {
    for (ObjectId z : b.objects()) {
      HomFunctorData f = build_hom_functor(*rec, x, z, opts);
      out.reports.push_back(f.report);
      out.reports.push_back(check_hom_equivalence(*rec, f, opts));
    }
  }
  PullbackCheck pb = check_composition_is_pullback(*rec, as_function, opts);
  out.reports.push_back(pb.report);

  CategoryPresentation p = rec->category().presentation(pb.pullbacks);
  Report valid("category-presentation", b.scope());
  valid.instances = 1;
  try {
    p.validate();
  } catch (const ConstructionError& e) {
    valid.violation({{"reason", e.what()}});
  }
  out.reports.push_back(std::move(valid));
  out.category = std::move(p);
  return out;
}

RoundtripResult roundtrip_span(const SpanFragment& f, const CheckOptions& opts) {
  const auto* fin = dynamic_cast<const FinSetCategory*>(&f.base());
  if (!fin) throw ConstructionError("roundtrip_span needs a FinSet span fragment");

  // Only the class function needs E; it is rebuilt lazily from the fragment.
  std::shared_ptr<LeftAdjointCategory> e;
  std::shared_ptr<AdjointIndex> adj = std::make_shared<AdjointIndex>(f, opts.jobs);
  auto category = [&]() -> const LeftAdjointCategory& {
    if (!e) e = std::make_shared<LeftAdjointCategory>(f, *adj);
    return *e;
  };
  ClassFunction as_function = [&](ObjectId x, ObjectId y, std::size_t k) {
    auto legs = f.legs(category().representative(x, y, k));
    FinFunction l = fin->to_function(legs.left), r = fin->to_function(legs.right);
    auto li = inverse(l);
    if (!li) throw ConstructionError("left adjoint span with non-bijective left leg");
    return compose_fn(*li, r);
  };

  RoundtripResult out = reconstruct_fragment(f, opts, as_function);
  if (!out.category) return out;

  Report counts("function-counts", f.scope());
  nlohmann::json table = nlohmann::json::array();
  for (ObjectId x : f.objects()) {
    for (ObjectId y : f.objects()) {
      ++counts.instances;
      const FinSetObj m{f.base_object(x)}, n{f.base_object(y)};
      const std::size_t classes = category().hom_size(x, y);
      std::set<FinFunction> functions;
      for (std::size_t k = 0; k < classes; ++k) functions.insert(as_function(x, y, k));
      const auto expected = function_count(m, n);
      table.push_back({{"from", m.size}, {"to", n.size}, {"classes", classes}, {"functions", expected}});
      if (classes != expected || functions.size() != classes) {
        counts.violation({{"from", m.size}, {"to", n.size}, {"classes", classes}, {"functions", expected}});
      }
    }
  }
  counts.details["homs"] = std::move(table);
  out.reports.push_back(std::move(counts));
  return out;
}

}  // namespace spanbicat
