#pragma once

#include <stdexcept>
#include <string>

namespace trackpath {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph construction rejected a loop, duplicate or out-of-range edge.
struct MalformedEdge : Error {
    int u, v;
    MalformedEdge(int u_, int v_, const std::string& why)
        : Error("malformed edge (" + std::to_string(u_) + "," + std::to_string(v_) + "): " + why),
          u(u_), v(v_) {}
};

// An enumeration or bounded search exceeded its configured cap.
struct CapExceeded : Error {
    using Error::Error;
};

// Exact search proved the optimum exceeds the caller's budget.
struct BudgetExceeded : Error {
    int optimum;
    explicit BudgetExceeded(int opt)
        : Error("minimum tracking set has size " + std::to_string(opt) + ", over budget"),
          optimum(opt) {}
};

// Reduction left nothing: source and destination are not connected.
struct EmptyResult : Error {
    using Error::Error;
};

struct Disconnected : Error {
    using Error::Error;
};

// A reduction hit a state its precondition rules out (e.g. contraction
// would create a parallel edge because Reduction 1 was skipped).
struct PreconditionViolated : Error {
    using Error::Error;
};

struct BadParameter : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& why)
        : Error("line " + std::to_string(line_) + ": " + why), line(line_) {}
};

// SAT compilation errors.
struct LayoutInvalid : Error {
    using Error::Error;
};
struct SlotConflict : LayoutInvalid {
    using LayoutInvalid::LayoutInvalid;
};
struct SideMismatch : LayoutInvalid {
    using LayoutInvalid::LayoutInvalid;
};
struct ForbiddenSlot : LayoutInvalid {
    using LayoutInvalid::LayoutInvalid;
};

} // namespace trackpath
