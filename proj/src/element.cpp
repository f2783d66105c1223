#include "tmcat/element.hpp"

#include "tmcat/error.hpp"

#include <sstream>
#include <utility>

namespace tmcat {

Element Element::atom(std::string name) {
    Element e;
    e.kind_ = Kind::Atom;
    e.name_ = std::move(name);
    return e;
}

Element Element::pair(Element a, Element b) {
    Element e;
    e.kind_ = Kind::Pair;
    e.kids_.reserve(2);
    e.kids_.push_back(std::move(a));
    e.kids_.push_back(std::move(b));
    return e;
}

Element Element::seq(std::vector<Element> items) {
    Element e;
    e.kind_ = Kind::Seq;
    e.kids_ = std::move(items);
    return e;
}

Element Element::tag(std::string label, Element inner) {
    Element e;
    e.kind_ = Kind::Tag;
    e.name_ = std::move(label);
    e.kids_.push_back(std::move(inner));
    return e;
}

Element Element::tree(Element label, std::vector<Element> kids) {
    Element e;
    e.kind_ = Kind::Tree;
    e.kids_.reserve(kids.size() + 1);
    e.kids_.push_back(std::move(label));
    for (auto& k : kids) e.kids_.push_back(std::move(k));
    return e;
}

const std::string& Element::name() const {
    if (kind_ != Kind::Atom && kind_ != Kind::Tag) throw Error("Element::name on " + str());
    return name_;
}

const Element& Element::first() const {
    if (kind_ != Kind::Pair) throw Error("Element::first on non-pair " + str());
    return kids_[0];
}

const Element& Element::second() const {
    if (kind_ != Kind::Pair) throw Error("Element::second on non-pair " + str());
    return kids_[1];
}

const Element& Element::inner() const {
    if (kind_ != Kind::Tag) throw Error("Element::inner on non-tag " + str());
    return kids_[0];
}

const std::vector<Element>& Element::items() const {
    if (kind_ != Kind::Seq) throw Error("Element::items on non-seq " + str());
    return kids_;
}

const Element& Element::label() const {
    if (kind_ != Kind::Tree) throw Error("Element::label on non-tree " + str());
    return kids_[0];
}

std::size_t Element::child_count() const {
    if (kind_ != Kind::Tree) throw Error("Element::child_count on non-tree " + str());
    return kids_.size() - 1;
}

const Element& Element::child(std::size_t i) const {
    if (kind_ != Kind::Tree) throw Error("Element::child on non-tree " + str());
    return kids_.at(i + 1);
}

std::vector<Element> Element::children() const {
    if (kind_ != Kind::Tree) throw Error("Element::children on non-tree " + str());
    return std::vector<Element>(kids_.begin() + 1, kids_.end());
}

std::strong_ordering Element::operator<=>(const Element& o) const {
    if (auto c = kind_ <=> o.kind_; c != 0) return c;
    if (auto c = name_ <=> o.name_; c != 0) return c;
    std::size_t n = std::min(kids_.size(), o.kids_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = kids_[i] <=> o.kids_[i]; c != 0) return c;
    return kids_.size() <=> o.kids_.size();
}

bool Element::operator==(const Element& o) const { return (*this <=> o) == 0; }

std::string Element::str() const {
    std::ostringstream out;
    switch (kind_) {
        case Kind::Atom:
            out << name_;
            break;
        case Kind::Pair:
            out << "(" << kids_[0].str() << "," << kids_[1].str() << ")";
            break;
        case Kind::Seq: {
            out << "[";
            for (std::size_t i = 0; i < kids_.size(); ++i) {
                if (i) out << ",";
                out << kids_[i].str();
            }
            out << "]";
            break;
        }
        case Kind::Tag:
            out << name_ << ":" << kids_[0].str();
            break;
        case Kind::Tree: {
            out << kids_[0].str() << "{";
            for (std::size_t i = 1; i < kids_.size(); ++i) {
                if (i > 1) out << ",";
                out << kids_[i].str();
            }
            out << "}";
            break;
        }
    }
    return out.str();
}

} // namespace tmcat
