#ifndef TMCAT_OPETOPE_HPP
#define TMCAT_OPETOPE_HPP

#include "tmcat/monad.hpp"

namespace tmcat {

// Cells of the tower built by repeatedly passing to labeled pastings.
// Dimensions 0 and 1 hold the single cell Atom("*"). A cell of dimension
// d >= 2 is either Tag("oid", c) for a (d-2)-cell c (the trivial pasting
// sitting on c) or Tree(g, kids) for a (d-1)-cell g, with one kid per node
// of g in preorder; the kid over a node must flatten onto that node's label.
// The single low-dimensional cell counts as one node for this purpose, so
// dimension-2 cells are chains.
Element opetope_point();
bool opetope_well_formed(const Element& w, int dim);

// nodes beyond the trivial pastings, counted through every layer
int opetope_size(const Element& w, int dim);

// places where a same-dimension cell can be grafted (dim >= 2)
int opetope_arity(const Element& w, int dim);

// node labels in preorder; cells of dimension <= 1 report one node
std::vector<Element> opetope_nodes(const Element& w, int dim);

// the (d-2)-cell a d-cell sits over when grafted (dim >= 2)
Element opetope_out(const Element& w, int dim);

// composes the pasting one level down: a d-cell becomes a (d-1)-cell
Element opetope_flat(const Element& w, int dim);

// all cells of the dimension with size <= size_bound
std::vector<Element> opetopes_up_to(int dim, int size_bound, std::size_t cap = kDefaultCap);

} // namespace tmcat

#endif
