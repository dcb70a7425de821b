#include "spanbicat/coherence.hpp"

#include <map>

namespace spanbicat {

namespace {

class Scan {
 public:
  Scan(const BicatFragment& b, Report& r) : b_(b), r_(r) {
    for (ObjectId x : b.objects()) {
      for (ObjectId y : b.objects()) {
        auto& cells = homs_[{x, y}];
        for (OneCell a : b.one_cells(x, y)) {
          for (OneCell c : b.one_cells(x, y)) {
            for (const TwoCell& t : b.two_cells(a, c)) {
              cells.push_back(t);
              out_[a].push_back(t);
            }
          }
        }
      }
    }
  }

  void run() {
    vertical();
    horizontal();
    associators();
    unitors();
    pentagons();
    triangles();
    r_.details["skipped_outside_closure"] = skipped_;
    r_.details["laws"] = laws_;
  }

 private:
  void count(const char* law) {
    ++r_.instances;
    laws_[law] = laws_.value(law, 0) + 1;
  }

  template <class... Cells>
  void expect(bool ok, const char* law, const Cells&... cells) {
    count(law);
    if (ok) return;
    nlohmann::json w{{"law", law}, {"cells", nlohmann::json::array()}};
    (w["cells"].push_back(cell_json(b_, cells)), ...);
    r_.violation(std::move(w));
  }

  void vertical() {
    for (const auto& [xy, cells] : homs_) {
      for (const TwoCell& a : cells) {
        expect(b_.vcomp(b_.identity(a.src), a) == a && b_.vcomp(a, b_.identity(a.tgt)) == a, "vertical-unit", a);
        for (const TwoCell& c : out_[a.tgt]) {
          TwoCell ac = b_.vcomp(a, c);
          for (const TwoCell& d : out_[c.tgt]) {
            expect(b_.vcomp(ac, d) == b_.vcomp(a, b_.vcomp(c, d)), "vertical-associativity", a, c, d);
          }
        }
      }
    }
  }

  void horizontal() {
    for (ObjectId x : b_.objects()) {
      for (ObjectId y : b_.objects()) {
        for (ObjectId z : b_.objects()) {
          for (OneCell a : b_.one_cells(x, y)) {
            for (OneCell c : b_.one_cells(y, z)) {
              auto ac = b_.hcomp(a, c);
              if (!ac) {
                ++skipped_;
                continue;
              }
              auto ids = b_.hcomp(b_.identity(a), b_.identity(c));
              expect(ids && *ids == b_.identity(*ac), "hcomp-identity", b_.identity(a), b_.identity(c));
            }
          }
          interchange(homs_[{x, y}], homs_[{y, z}]);
        }
      }
    }
  }

  void interchange(const std::vector<TwoCell>& left, const std::vector<TwoCell>& right) {
    for (const TwoCell& a : left) {
      for (const TwoCell& a2 : out_[a.tgt]) {
        TwoCell aa = b_.vcomp(a, a2);
        for (const TwoCell& c : right) {
          auto top = b_.hcomp(a, c);
          if (!top) {
            ++skipped_;
            continue;
          }
          for (const TwoCell& c2 : out_[c.tgt]) {
            auto bottom = b_.hcomp(a2, c2);
            auto whole = b_.hcomp(aa, b_.vcomp(c, c2));
            if (!bottom || !whole) {
              ++skipped_;
              continue;
            }
            expect(*whole == b_.vcomp(*top, *bottom), "interchange", a, a2, c, c2);
          }
        }
      }
    }
  }

  void associators() {
    for (ObjectId w : b_.objects()) {
      for (ObjectId x : b_.objects()) {
        for (ObjectId y : b_.objects()) {
          for (ObjectId z : b_.objects()) {
            associators_at(w, x, y, z);
          }
        }
      }
    }
  }

  void associators_at(ObjectId w, ObjectId x, ObjectId y, ObjectId z) {
    for (OneCell a : b_.one_cells(w, x)) {
      for (OneCell c : b_.one_cells(x, y)) {
        for (OneCell d : b_.one_cells(y, z)) {
          auto fwd = b_.associator(a, c, d);
          auto inv = b_.associator_inverse(a, c, d);
          if (!fwd || !inv) {
            ++skipped_;
            continue;
          }
          expect(b_.vcomp(*fwd, *inv) == b_.identity(fwd->src) && b_.vcomp(*inv, *fwd) == b_.identity(fwd->tgt),
                 "associator-invertible", *fwd, *inv);
        }
      }
    }
    for (const TwoCell& al : homs_[{w, x}]) {
      for (const TwoCell& be : homs_[{x, y}]) {
        auto ab = b_.hcomp(al, be);
        if (!ab) {
          ++skipped_;
          continue;
        }
        for (const TwoCell& ga : homs_[{y, z}]) {
          auto src = b_.associator(al.src, be.src, ga.src);
          auto tgt = b_.associator(al.tgt, be.tgt, ga.tgt);
          auto left = b_.hcomp(*ab, ga);
          auto bg = b_.hcomp(be, ga);
          std::optional<TwoCell> right;
          if (bg) right = b_.hcomp(al, *bg);
          if (!src || !tgt || !left || !right) {
            ++skipped_;
            continue;
          }
          expect(b_.vcomp(*left, *tgt) == b_.vcomp(*src, *right), "associator-naturality", al, be, ga);
        }
      }
    }
  }

  void unitors() {
    for (ObjectId x : b_.objects()) {
      for (ObjectId y : b_.objects()) {
        for (OneCell a : b_.one_cells(x, y)) {
          auto lu = b_.left_unitor(a), lui = b_.left_unitor_inverse(a);
          auto ru = b_.right_unitor(a), rui = b_.right_unitor_inverse(a);
          if (!lu || !lui || !ru || !rui) {
            ++skipped_;
            continue;
          }
          expect(b_.vcomp(*lu, *lui) == b_.identity(lu->src) && b_.vcomp(*lui, *lu) == b_.identity(a),
                 "left-unitor-invertible", *lu, *lui);
          expect(b_.vcomp(*ru, *rui) == b_.identity(ru->src) && b_.vcomp(*rui, *ru) == b_.identity(a),
                 "right-unitor-invertible", *ru, *rui);
        }
        for (const TwoCell& al : homs_[{x, y}]) {
          auto l = b_.hcomp(b_.identity(b_.identity(x)), al);
          auto r = b_.hcomp(al, b_.identity(b_.identity(y)));
          auto lu_s = b_.left_unitor(al.src), lu_t = b_.left_unitor(al.tgt);
          auto ru_s = b_.right_unitor(al.src), ru_t = b_.right_unitor(al.tgt);
          if (!l || !r || !lu_s || !lu_t || !ru_s || !ru_t) {
            ++skipped_;
            continue;
          }
          expect(b_.vcomp(*l, *lu_t) == b_.vcomp(*lu_s, al), "left-unitor-naturality", al);
          expect(b_.vcomp(*r, *ru_t) == b_.vcomp(*ru_s, al), "right-unitor-naturality", al);
        }
      }
    }
  }

  void pentagons() {
    const auto objs = b_.objects();
    for (ObjectId v : objs) {
      for (ObjectId w : objs) {
        for (ObjectId x : objs) {
          for (ObjectId y : objs) {
            for (ObjectId z : objs) {
              for (OneCell a : b_.one_cells(v, w)) {
                for (OneCell c : b_.one_cells(w, x)) {
                  auto ac = b_.hcomp(a, c);
                  if (!ac) {
                    ++skipped_;
                    continue;
                  }
                  for (OneCell d : b_.one_cells(x, y)) {
                    for (OneCell e : b_.one_cells(y, z)) pentagon(a, c, d, e);
                  }
                }
              }
            }
          }
        }
      }
    }
  }

  void pentagon(OneCell a, OneCell c, OneCell d, OneCell e) {
    auto ac = b_.hcomp(a, c), cd = b_.hcomp(c, d), de = b_.hcomp(d, e);
    if (!ac || !cd || !de) {
      ++skipped_;
      return;
    }
    auto lhs = vcomp_chain(b_, {b_.associator(*ac, d, e), b_.associator(a, c, *de)});
    auto lhs_whisker = b_.associator(a, c, d);
    std::optional<TwoCell> rhs;
    if (lhs_whisker) {
      rhs = vcomp_chain(b_, {whisker_right(b_, *lhs_whisker, e), b_.associator(a, *cd, e)});
      auto inner = b_.associator(c, d, e);
      if (rhs && inner) {
        rhs = vcomp_chain(b_, {rhs, whisker_left(b_, a, *inner)});
      } else {
        rhs.reset();
      }
    }
    if (!lhs || !rhs) {
      ++skipped_;
      return;
    }
    expect(*lhs == *rhs, "pentagon", b_.identity(a), b_.identity(c), b_.identity(d), b_.identity(e));
  }

  void triangles() {
    for (ObjectId x : b_.objects()) {
      for (ObjectId y : b_.objects()) {
        for (ObjectId z : b_.objects()) {
          for (OneCell a : b_.one_cells(x, y)) {
            for (OneCell c : b_.one_cells(y, z)) {
              OneCell one = b_.identity(y);
              auto assoc = b_.associator(a, one, c);
              auto lu = b_.left_unitor(c);
              auto ru = b_.right_unitor(a);
              if (!assoc || !lu || !ru) {
                ++skipped_;
                continue;
              }
              auto lhs = vcomp_chain(b_, {assoc, whisker_left(b_, a, *lu)});
              auto rhs = whisker_right(b_, *ru, c);
              if (!lhs || !rhs) {
                ++skipped_;
                continue;
              }
              expect(*lhs == *rhs, "triangle", b_.identity(a), b_.identity(c));
            }
          }
        }
      }
    }
  }

  const BicatFragment& b_;
  Report& r_;
  std::map<std::pair<ObjectId, ObjectId>, std::vector<TwoCell>> homs_;
  std::map<OneCell, std::vector<TwoCell>> out_;
  std::size_t skipped_ = 0;
  nlohmann::json laws_ = nlohmann::json::object();
};

}  // namespace

Report check_coherence(const BicatFragment& b, const CheckOptions& opts) {
  Report r("coherence", b.scope());
  r.max_witnesses = opts.max_witnesses;
  try {
    Scan(b, r).run();
  } catch (const FragmentIncomplete& e) {
    r.incomplete(e.what());
  }
  return r;
}

}  // namespace spanbicat
