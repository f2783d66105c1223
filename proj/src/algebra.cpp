#include "tmcat/algebra.hpp"

#include "tmcat/error.hpp"

#include <functional>

namespace tmcat {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

// cod of the underlying arrow, the projection of the blob over objects
FiniteMap blob_proj(const Multicategory& M, const FiniteSet& blob) {
    return FiniteMap::from_function(blob, M.objects, [&](const Element& key) {
        return M.cod(key.second());
    });
}

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t cap,
                        const std::string& who) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base)
            throw GuardError(who + ": " + std::to_string(base) + "^" + std::to_string(exp) +
                             " exceeds cap " + std::to_string(cap));
        r *= base;
    }
    return r;
}

} // namespace

FiniteSet blob_set(const Multicategory& M, const FiniteSet& X, const FiniteMap& p,
                   std::size_t cap) {
    require(p.source() == X, "blob_set: projection source is not the carrier");
    require(p.target() == M.objects, "blob_set: projection target is not the object set");
    std::vector<Element> out;
    for (const Element& a : M.arrows) {
        for (const Element& u : M.monad->enumerate_fiber(p, M.dom(a), cap)) {
            out.push_back(Element::pair(u, a));
            if (out.size() > cap)
                throw GuardError("blob_set: more than " + std::to_string(cap) + " elements");
        }
    }
    return FiniteSet(std::move(out));
}

Element blob_unit(const Multicategory& M, const FiniteMap& p, const Element& x) {
    return Element::pair(M.monad->unit(x), M.ids(p(x)));
}

std::optional<Element> blob_mult(const Multicategory& M, const Element& wa) {
    require(wa.is_pair(), "blob_mult: expected Pair(w, a), got " + wa.str());
    const Element& w = wa.first();
    const Element& a = wa.second();
    std::vector<Element> us, as;
    for (const Element& lab : M.monad->labels(w)) {
        require(lab.is_pair(), "blob_mult: label " + lab.str() + " is not a blob element");
        us.push_back(lab.first());
        as.push_back(lab.second());
    }
    Element inner_key = Element::pair(M.monad->relabel(w, as), a);
    if (!M.comp.source().contains(inner_key)) return std::nullopt;
    return Element::pair(M.monad->mult(M.monad->relabel(w, us)), M.comp(inner_key));
}

Element blob_map(const MonadPlugin& T, const FiniteMap& h, const Element& ua) {
    require(ua.is_pair(), "blob_map: expected Pair(u, a), got " + ua.str());
    return Element::pair(T.apply_map(h, ua.first()), ua.second());
}

LawReport check_algebra(const Multicategory& M, const Algebra& alg, std::size_t cap) {
    const MonadPlugin& T = *M.monad;
    FiniteSet blob = blob_set(M, alg.carrier, alg.p, cap);
    require(alg.act.source() == blob, "check_algebra: action table source is not the blob");
    require(alg.act.target() == alg.carrier, "check_algebra: action values leave the carrier");

    LawReport rep;
    for (const Element& key : blob) {
        if (alg.p(alg.act(key)) != M.cod(key.second()))
            rep.fail("projection: act(" + key.str() + ") = " + alg.act(key).str() +
                     " does not lie over cod " + M.cod(key.second()).str());
    }
    for (const Element& x : alg.carrier) {
        Element key = blob_unit(M, alg.p, x);
        if (!blob.contains(key)) {
            rep.fail("unit: " + key.str() + " is not a blob element");
            continue;
        }
        if (alg.act(key) != x)
            rep.fail("unit: act(" + key.str() + ") = " + alg.act(key).str() + " expected " +
                     x.str());
    }
    // action law over every two-level element whose flattening survives
    // truncation: acting after flattening agrees with acting labelwise first
    FiniteMap q = blob_proj(M, blob);
    for (const Element& a : M.arrows) {
        for (const Element& w : T.enumerate_fiber(q, M.dom(a), cap)) {
            Element wa = Element::pair(w, a);
            auto flat = blob_mult(M, wa);
            if (!flat) continue;
            if (!blob.contains(*flat)) {
                rep.fail("action: flattening of " + wa.str() + " escapes the blob");
                continue;
            }
            Element stepped = blob_map(T, alg.act, wa);
            if (!blob.contains(stepped)) {
                rep.fail("action: labelwise image of " + wa.str() + " escapes the blob");
                continue;
            }
            if (alg.act(*flat) != alg.act(stepped))
                rep.fail("action: " + wa.str() + " evaluates to " + alg.act(*flat).str() +
                         " flattened but " + alg.act(stepped).str() + " stepwise");
        }
    }
    return rep;
}

std::vector<Algebra> enumerate_algebras(const Multicategory& M, int max_size,
                                        std::size_t cap) {
    const MonadPlugin& T = *M.monad;
    std::vector<Algebra> out;
    for (int n = 0; n <= max_size; ++n) {
        FiniteSet X = FiniteSet::named(static_cast<std::size_t>(n), "x");
        if (M.objects.empty() && n > 0) break;
        checked_pow(M.objects.size(), static_cast<std::size_t>(n), cap, "enumerate_algebras");
        // odometer over projections X -> objects
        std::vector<std::size_t> pidx(static_cast<std::size_t>(n), 0);
        while (true) {
            std::vector<std::pair<Element, Element>> pentries;
            for (int i = 0; i < n; ++i)
                pentries.emplace_back(X.at(static_cast<std::size_t>(i)),
                                      M.objects.at(pidx[static_cast<std::size_t>(i)]));
            FiniteMap p(X, M.objects, pentries);

            FiniteSet blob = blob_set(M, X, p, cap);
            const std::vector<Element>& keys = blob.elems();

            // unit keys are forced to their own carrier element
            std::vector<std::vector<Element>> choices(keys.size());
            for (const Element& x : X) {
                Element ukey = blob_unit(M, p, x);
                if (blob.contains(ukey)) choices[blob.index_of(ukey)] = {x};
            }
            bool feasible = true;
            std::size_t count = 1;
            for (std::size_t i = 0; i < keys.size(); ++i) {
                if (choices[i].empty()) {
                    for (const Element& x : p.fiber(M.cod(keys[i].second())))
                        choices[i].push_back(x);
                }
                if (choices[i].empty()) {
                    feasible = false;
                    break;
                }
                if (count > cap / choices[i].size())
                    throw GuardError("enumerate_algebras: table count exceeds cap " +
                                     std::to_string(cap));
                count *= choices[i].size();
            }

            if (feasible) {
                // the action law instances do not depend on the table, so fix
                // them once per projection
                struct Instance {
                    std::size_t flat_index;
                    Element w;
                    const Element* arrow;
                    std::vector<std::size_t> label_index;
                    bool poisoned;  // flattening lands outside the blob
                };
                std::vector<Instance> instances;
                FiniteMap q = blob_proj(M, blob);
                for (const Element& a : M.arrows) {
                    for (const Element& w : T.enumerate_fiber(q, M.dom(a), cap)) {
                        auto flat = blob_mult(M, Element::pair(w, a));
                        if (!flat) continue;
                        Instance inst;
                        inst.w = w;
                        inst.arrow = &a;
                        inst.poisoned = !blob.contains(*flat);
                        inst.flat_index = inst.poisoned ? 0 : blob.index_of(*flat);
                        for (const Element& lab : T.labels(w))
                            inst.label_index.push_back(blob.index_of(lab));
                        instances.push_back(std::move(inst));
                    }
                }

                std::vector<std::size_t> sel(keys.size(), 0);
                std::vector<Element> val(keys.size());
                while (true) {
                    for (std::size_t i = 0; i < keys.size(); ++i) val[i] = choices[i][sel[i]];
                    bool ok = true;
                    for (const Instance& inst : instances) {
                        if (inst.poisoned) {
                            ok = false;
                            break;
                        }
                        std::vector<Element> mapped;
                        mapped.reserve(inst.label_index.size());
                        for (std::size_t j : inst.label_index) mapped.push_back(val[j]);
                        Element stepped =
                            Element::pair(T.relabel(inst.w, mapped), *inst.arrow);
                        if (!blob.contains(stepped)) {
                            ok = false;
                            break;
                        }
                        if (val[inst.flat_index] != val[blob.index_of(stepped)]) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) {
                        std::vector<std::pair<Element, Element>> entries;
                        for (std::size_t i = 0; i < keys.size(); ++i)
                            entries.emplace_back(keys[i], val[i]);
                        out.push_back(Algebra{X, p, FiniteMap(blob, X, entries)});
                    }
                    std::size_t d = 0;
                    while (d < keys.size() && ++sel[d] == choices[d].size()) sel[d++] = 0;
                    if (d == keys.size()) break;
                }
            }

            std::size_t d = 0;
            std::size_t nn = static_cast<std::size_t>(n);
            while (d < nn && ++pidx[d] == M.objects.size()) pidx[d++] = 0;
            if (d == nn) break;
        }
    }
    return out;
}

namespace {

Element arity_word(int n) {
    std::vector<Element> stars(static_cast<std::size_t>(n), Element::atom("*"));
    return Element::seq(std::move(stars));
}

int endo_arity(const Element& arrow) {
    return static_cast<int>(arrow.first().items().size());
}

Element endo_eval(const FiniteSet& X, const Element& arrow, const std::vector<Element>& args) {
    std::size_t rank = 0;
    for (const Element& a : args) rank = rank * X.size() + X.index_of(a);
    return arrow.second().items().at(rank);
}

} // namespace

Multicategory endomorphism_operad(const FiniteSet& X, int max_arity, std::size_t cap) {
    require(max_arity >= 1, "endomorphism_operad: max_arity must cover the identity");
    std::vector<Element> arrows;
    std::vector<std::vector<Element>> by_arity(static_cast<std::size_t>(max_arity) + 1);
    for (int n = 0; n <= max_arity; ++n) {
        std::size_t tuples =
            checked_pow(X.size(), static_cast<std::size_t>(n), cap, "endomorphism_operad");
        checked_pow(X.size(), tuples, cap, "endomorphism_operad");
        if (X.empty() && tuples > 0) continue;  // no functions into an empty set
        // odometer over output tables
        std::vector<std::size_t> sel(tuples, 0);
        while (true) {
            std::vector<Element> outs;
            outs.reserve(tuples);
            for (std::size_t i = 0; i < tuples; ++i) outs.push_back(X.at(sel[i]));
            Element ar = Element::pair(arity_word(n), Element::seq(std::move(outs)));
            arrows.push_back(ar);
            by_arity[static_cast<std::size_t>(n)].push_back(ar);
            if (arrows.size() > cap)
                throw GuardError("endomorphism_operad: arrow count exceeds cap");
            std::size_t d = 0;
            while (d < tuples && ++sel[d] == X.size()) sel[d++] = 0;
            if (d == tuples) break;
        }
    }
    FiniteSet arrow_set(arrows);
    FiniteSet one = FiniteSet::terminal();
    Element star = Element::atom("*");
    PluginRef T = free_monoid_monad();

    ElemTable dom = ElemTable::from_function(arrow_set,
                                             [](const Element& a) { return a.first(); });
    FiniteMap cod = FiniteMap::constant(arrow_set, one, star);
    std::vector<Element> idouts;
    for (const Element& x : X) idouts.push_back(x);
    Element id_arrow = Element::pair(arity_word(1), Element::seq(idouts));
    FiniteMap ids(one, arrow_set, {{star, id_arrow}});

    // composition substitutes blocks, truncated at max_arity
    std::vector<std::pair<Element, Element>> centries;
    std::vector<Element> ckeys;
    for (const Element& a : arrow_set) {
        int k = endo_arity(a);
        std::vector<const Element*> pick(static_cast<std::size_t>(k));
        std::function<void(int, int)> go = [&](int pos, int used) {
            if (pos == k) {
                std::vector<Element> us;
                int m = used;
                for (const Element* f : pick) us.push_back(*f);
                Element u = Element::seq(us);
                std::size_t tuples = 1;
                for (int i = 0; i < m; ++i) tuples *= X.size();
                std::vector<Element> outs;
                outs.reserve(tuples);
                std::vector<std::size_t> tup(static_cast<std::size_t>(m), 0);
                for (std::size_t done = 0; done < tuples; ++done) {
                    std::vector<Element> mids;
                    std::size_t off = 0;
                    for (const Element* f : pick) {
                        std::vector<Element> block;
                        for (int j = 0; j < endo_arity(*f); ++j)
                            block.push_back(X.at(tup[off + static_cast<std::size_t>(j)]));
                        off += static_cast<std::size_t>(endo_arity(*f));
                        mids.push_back(endo_eval(X, *f, block));
                    }
                    outs.push_back(endo_eval(X, a, mids));
                    std::size_t d = static_cast<std::size_t>(m);
                    while (d > 0 && ++tup[d - 1] == X.size()) tup[--d] = 0;
                }
                Element value = Element::pair(arity_word(m), Element::seq(std::move(outs)));
                centries.emplace_back(Element::pair(u, a), value);
                if (centries.size() > cap)
                    throw GuardError("endomorphism_operad: composite count exceeds cap");
                return;
            }
            for (int ar = 0; ar + used <= max_arity && ar <= max_arity; ++ar) {
                for (const Element& f : by_arity[static_cast<std::size_t>(ar)]) {
                    pick[static_cast<std::size_t>(pos)] = &f;
                    go(pos + 1, used + ar);
                }
            }
        };
        go(0, 0);
    }
    for (auto& e : centries) ckeys.push_back(e.first);
    FiniteMap comp(FiniteSet(ckeys), arrow_set, centries);

    return make_multicat(T, one, arrow_set, dom, cod, ids, comp);
}

Element endo_apply(const FiniteSet& X, const Element& arrow, const std::vector<Element>& args) {
    require(arrow.is_pair() && arrow.first().is_seq() && arrow.second().is_seq(),
            "endo_apply: not an endomorphism arrow: " + arrow.str());
    require(static_cast<int>(args.size()) == endo_arity(arrow),
            "endo_apply: arity mismatch for " + arrow.str());
    return endo_eval(X, arrow, args);
}

FiniteMap algebra_as_endo_map(const Multicategory& O, const Algebra& alg,
                              const Multicategory& endx) {
    require(O.monad->name() == "free_monoid" && endx.monad->name() == "free_monoid",
            "algebra_as_endo_map: both sides must be sequence-plugin operads");
    require(O.objects.size() == 1, "algebra_as_endo_map: the source must have one object");
    const FiniteSet& X = alg.carrier;
    std::vector<std::pair<Element, Element>> entries;
    for (const Element& s : O.arrows) {
        std::size_t n = O.monad->labels(O.dom(s)).size();
        std::size_t tuples = 1;
        for (std::size_t i = 0; i < n; ++i) tuples *= X.size();
        std::vector<Element> outs;
        std::vector<std::size_t> tup(n, 0);
        for (std::size_t done = 0; done < tuples; ++done) {
            std::vector<Element> args;
            for (std::size_t i = 0; i < n; ++i) args.push_back(X.at(tup[i]));
            outs.push_back(alg.act(Element::pair(Element::seq(args), s)));
            std::size_t d = n;
            while (d > 0 && ++tup[d - 1] == X.size()) tup[--d] = 0;
        }
        Element target = Element::pair(arity_word(static_cast<int>(n)),
                                       Element::seq(std::move(outs)));
        require(endx.arrows.contains(target),
                "algebra_as_endo_map: " + target.str() + " is beyond the target's arity bound");
        entries.emplace_back(s, target);
    }
    return FiniteMap(O.arrows, endx.arrows, entries);
}

Algebra endo_map_as_algebra(const Multicategory& O, const Multicategory& endx,
                            const FiniteSet& X, const FiniteMap& fa) {
    require(O.objects.size() == 1, "endo_map_as_algebra: the source must have one object");
    require(fa.source() == O.arrows && fa.target() == endx.arrows,
            "endo_map_as_algebra: fa must map the source arrows into the target arrows");
    FiniteMap p = FiniteMap::constant(X, O.objects, O.objects.at(0));
    FiniteSet blob = blob_set(O, X, p);
    FiniteMap act = FiniteMap::from_function(blob, X, [&](const Element& key) {
        return endo_apply(X, fa(key.second()), O.monad->labels(key.first()));
    });
    return Algebra{X, p, act};
}

Multicategory slice_multicat(const Multicategory& M, const Algebra& alg, std::size_t cap) {
    const MonadPlugin& T = *M.monad;
    FiniteSet blob = blob_set(M, alg.carrier, alg.p, cap);
    require(alg.act.source() == blob, "slice_multicat: action table source is not the blob");

    ElemTable dom = ElemTable::from_function(blob,
                                             [](const Element& key) { return key.first(); });
    FiniteMap cod = alg.act;
    FiniteMap ids = FiniteMap::from_function(alg.carrier, blob, [&](const Element& x) {
        Element key = blob_unit(M, alg.p, x);
        require(blob.contains(key), "slice_multicat: identity " + key.str() + " is not a blob element");
        return key;
    });

    std::vector<std::pair<Element, Element>> centries;
    std::vector<Element> ckeys;
    for (const Element& arrow : blob) {
        for (const Element& w : T.enumerate_fiber(alg.act, arrow.first(), cap)) {
            auto flat = blob_mult(M, Element::pair(w, arrow.second()));
            if (!flat || !blob.contains(*flat)) continue;
            centries.emplace_back(Element::pair(w, arrow), *flat);
            ckeys.push_back(centries.back().first);
            if (centries.size() > cap)
                throw GuardError("slice_multicat: composite count exceeds cap");
        }
    }
    FiniteMap comp(FiniteSet(ckeys), blob, centries);
    return make_multicat(M.monad, alg.carrier, blob, dom, cod, ids, comp);
}

Algebra restrict_algebra(const Multicategory& M, const Multicategory& N,
                         const FiniteMap& fo, const FiniteMap& fa, const Algebra& beta,
                         std::size_t cap) {
    require(fo.source() == M.objects && fo.target() == N.objects,
            "restrict_algebra: fo must map objects to objects");
    require(fa.source() == M.arrows && fa.target() == N.arrows,
            "restrict_algebra: fa must map arrows to arrows");
    PullbackResult pb = pullback(fo, beta.p);
    const FiniteSet& X = pb.apex;
    const FiniteMap& p = pb.p1;
    FiniteSet blob = blob_set(M, X, p, cap);
    FiniteSet target_blob = beta.act.source();
    FiniteMap act = FiniteMap::from_function(blob, X, [&](const Element& key) {
        Element down = M.monad->apply_map(pb.p2, key.first());
        Element beta_key = Element::pair(down, fa(key.second()));
        require(target_blob.contains(beta_key),
                "restrict_algebra: " + beta_key.str() + " is not in the target blob");
        Element value = Element::pair(M.cod(key.second()), beta.act(beta_key));
        require(X.contains(value), "restrict_algebra: " + value.str() + " falls outside the pullback");
        return value;
    });
    return Algebra{X, p, act};
}

} // namespace tmcat
