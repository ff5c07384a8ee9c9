#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "blockcodes/codes.hpp"
#include "blockcodes/graph.hpp"

namespace blockcodes {

enum class ConstructCase {
    Base,                  // at most three vertices, solved exactly
    LeafAdded,             // G - x twin-free, y not in C': C' + x
    LeafAddedYCovered,     // G - x twin-free, y in C' with a code neighbor: C' + x
    NeighborAdded,         // G - x twin-free, N[y] ∩ C' = {y}: C' + z
    TwinLeafAdded,         // G - x has twins y, v; y not in C'': C'' + x
    TwinSwapped,           // G - x has twins y, v; y in C'': C'' - y + x + v
};

const char* case_name(ConstructCase c);

/// One level of the recursion, in the input graph's labels.
struct ConstructStep {
    int depth = 0;
    ConstructCase which = ConstructCase::Base;
    Vertex removed = -1;      // the degree-1 vertex x (-1 for Base)
    Vertex neighbor = -1;     // its neighbor y
    Vertex twin = -1;         // v when G - x has twins
    std::vector<Vertex> added;
    int code_size = 0;        // size of the code returned at this level
};

struct ConstructResult {
    Code code;
    std::vector<ConstructStep> trace;  // outermost level first
};

enum class ConstructPrecondition { Disconnected, NotBlockGraph, NotIdentifiable };

class ConstructPreconditionError : public std::invalid_argument {
public:
    ConstructPreconditionError(ConstructPrecondition which, std::vector<Vertex> witness, const std::string& what)
        : std::invalid_argument(what), which_(which), witness_(std::move(witness)) {}
    ConstructPrecondition which() const { return which_; }
    const std::vector<Vertex>& witness() const { return witness_; }

private:
    ConstructPrecondition which_;
    std::vector<Vertex> witness_;
};

/// A case of the recursion produced an invalid code. Never expected.
class InternalContradiction : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Identifying code of size at most n_Q(g) for a connected identifiable
/// block graph.
///
/// Peels a degree-1 vertex x with neighbor y and recurses on G - x. Such an
/// x exists once n >= 4: every leaf block of a connected block graph with
/// at least two blocks holds a single articulation vertex, so a leaf block
/// of size >= 3 would contain two true twins; hence some leaf block is an
/// edge. (A single block on >= 2 vertices is a clique and not identifiable.)
/// If G - x has true twins they are y and a unique v, and the recursion
/// continues on G - x - v instead. Graphs on at most three vertices (K1,
/// P3) are solved exactly. Each level's code is re-validated.
///
/// Vertex choices are deterministic: the least degree-1 vertex, and the
/// least eligible neighbor z of y.
ConstructResult id_code_at_most_nq(const Graph& g);

}  // namespace blockcodes
