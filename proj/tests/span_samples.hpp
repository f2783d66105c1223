#ifndef TMCAT_TESTS_SPAN_SAMPLES_HPP
#define TMCAT_TESTS_SPAN_SAMPLES_HPP

#include "tmcat/span.hpp"

#include <random>
#include <string>

namespace tmcat_tests {

// Span with a fresh atom apex, legs drawn uniformly. term_bound caps the
// size of input-leg terms, which is what keeps composites small.
inline tmcat::Span random_span(std::mt19937& rng, tmcat::PluginRef T,
                               const tmcat::FiniteSet& src, const tmcat::FiniteSet& dst,
                               int max_apex, int term_bound, const std::string& tag) {
    using namespace tmcat;
    auto terms = T->enumerate_telements(src, term_bound);
    int n = std::uniform_int_distribution<int>(1, max_apex)(rng);
    std::vector<Element> names;
    for (int i = 0; i < n; ++i) names.push_back(Element::atom(tag + std::to_string(i)));
    FiniteSet apex(names);
    std::uniform_int_distribution<std::size_t> dterm(0, terms.size() - 1);
    std::uniform_int_distribution<std::size_t> dout(0, dst.size() - 1);
    std::vector<std::pair<Element, Element>> dome, code;
    for (const auto& e : apex) {
        dome.emplace_back(e, terms[dterm(rng)]);
        code.emplace_back(e, dst.at(dout(rng)));
    }
    return make_span(T, src, dst, apex, ElemTable(apex, dome), FiniteMap(apex, dst, code));
}

inline tmcat::FiniteSet random_set(std::mt19937& rng, int max_size, const std::string& tag) {
    int n = std::uniform_int_distribution<int>(1, max_size)(rng);
    return tmcat::FiniteSet::named(static_cast<std::size_t>(n), tag);
}

} // namespace tmcat_tests

#endif
