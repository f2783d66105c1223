#ifndef TMCAT_ELEMENT_HPP
#define TMCAT_ELEMENT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tmcat {

// Canonical term language for set elements. Everything that lives in a finite
// set here (base elements, monad terms, composite-span apex members, free
// multicategory arrows, opetopes) is an Element, so sets and tables stay
// uniform and ordering/serialization are defined once.
//
// Total order: constructor kind first (Atom < Pair < Seq < Tag < Tree), then
// lexicographic contents.
class Element {
public:
    enum class Kind : std::uint8_t { Atom, Pair, Seq, Tag, Tree };

    Element() : kind_(Kind::Atom) {}

    static Element atom(std::string name);
    static Element pair(Element a, Element b);
    static Element seq(std::vector<Element> items);
    static Element tag(std::string label, Element inner);
    static Element tree(Element label, std::vector<Element> kids);

    Kind kind() const { return kind_; }
    bool is_atom() const { return kind_ == Kind::Atom; }
    bool is_pair() const { return kind_ == Kind::Pair; }
    bool is_seq() const { return kind_ == Kind::Seq; }
    bool is_tag() const { return kind_ == Kind::Tag; }
    bool is_tree() const { return kind_ == Kind::Tree; }

    // Atom name or Tag label.
    const std::string& name() const;
    const Element& first() const;   // Pair
    const Element& second() const;  // Pair
    const Element& inner() const;   // Tag
    const std::vector<Element>& items() const;  // Seq
    const Element& label() const;               // Tree
    std::size_t child_count() const;            // Tree
    const Element& child(std::size_t i) const;  // Tree
    std::vector<Element> children() const;      // Tree, copies

    std::strong_ordering operator<=>(const Element& o) const;
    bool operator==(const Element& o) const;

    std::string str() const;

private:
    Kind kind_;
    std::string name_;
    // Pair: {a, b}. Seq: items. Tag: {inner}. Tree: {label, kids...}.
    std::vector<Element> kids_;
};

} // namespace tmcat

#endif
