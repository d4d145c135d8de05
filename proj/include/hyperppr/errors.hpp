#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperppr {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The supplied data (file contents, edge lists, ...) is invalid.
// The CLI maps this family to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// A computation was asked to do something it cannot (wrong structure,
// too large, diverged, ...). The CLI maps this family to exit code 3.
class ComputeError : public Error {
 public:
  using Error::Error;
};

class NonPositiveWeight : public InputError {
 public:
  explicit NonPositiveWeight(std::size_t edge_index)
      : InputError("edge " + std::to_string(edge_index) + " has non-positive weight"),
        edge_index(edge_index) {}
  std::size_t edge_index;
};

class EmptyEdge : public InputError {
 public:
  explicit EmptyEdge(std::size_t edge_index)
      : InputError("edge " + std::to_string(edge_index) + " has no members"),
        edge_index(edge_index) {}
  std::size_t edge_index;
};

class DuplicateMember : public InputError {
 public:
  explicit DuplicateMember(std::size_t edge_index)
      : InputError("edge " + std::to_string(edge_index) + " lists a vertex twice"),
        edge_index(edge_index) {}
  std::size_t edge_index;
};

class MemberOutOfRange : public InputError {
 public:
  MemberOutOfRange(std::size_t edge_index, std::size_t member)
      : InputError("edge " + std::to_string(edge_index) + " references vertex " +
                   std::to_string(member) + " outside [0, n)"),
        edge_index(edge_index),
        member(member) {}
  std::size_t edge_index;
  std::size_t member;
};

class IsolatedVertex : public InputError {
 public:
  explicit IsolatedVertex(std::size_t vertex)
      : InputError("vertex " + std::to_string(vertex) +
                   " has degree 0 (use drop-isolated to remove such vertices)"),
        vertex(vertex) {}
  std::size_t vertex;
};

class MalformedLine : public InputError {
 public:
  explicit MalformedLine(std::size_t line_no, const std::string& what = "")
      : InputError("line " + std::to_string(line_no) + ": malformed input" +
                   (what.empty() ? "" : " (" + what + ")")),
        line_no(line_no) {}
  std::size_t line_no;
};

class IoError : public InputError {
 public:
  explicit IoError(const std::string& path)
      : InputError("cannot open '" + path + "'"), path(path) {}
  std::string path;
};

class DegenerateSubset : public ComputeError {
 public:
  DegenerateSubset() : ComputeError("conductance is undefined for the empty set and for V") {}
};

class EmptySubset : public ComputeError {
 public:
  EmptySubset() : ComputeError("operation requires a non-empty vertex set") {}
};

class NotAGraph : public ComputeError {
 public:
  explicit NotAGraph(std::size_t edge_index)
      : ComputeError("edge " + std::to_string(edge_index) +
                     " is not a pair; operation requires a graph (all |e| = 2)"),
        edge_index(edge_index) {}
  std::size_t edge_index;
};

class NoConvergence : public ComputeError {
 public:
  explicit NoConvergence(std::size_t iterations)
      : ComputeError("iteration did not converge within " + std::to_string(iterations) +
                     " steps"),
        iterations(iterations) {}
  std::size_t iterations;
};

class SingularSystem : public ComputeError {
 public:
  SingularSystem() : ComputeError("linear system is singular (should be impossible for alpha in (0,1])") {}
};

class NonFiniteState : public ComputeError {
 public:
  explicit NonFiniteState(std::size_t iteration)
      : ComputeError("diffusion state became non-finite at step " + std::to_string(iteration) +
                     " (dt too large?)"),
        iteration(iteration) {}
  std::size_t iteration;
};

class TooLarge : public ComputeError {
 public:
  TooLarge(std::size_t n, std::size_t limit)
      : ComputeError("instance size " + std::to_string(n) + " exceeds limit " +
                     std::to_string(limit)),
        n(n),
        limit(limit) {}
  std::size_t n;
  std::size_t limit;
};

class ExpansionBudgetExceeded : public ComputeError {
 public:
  ExpansionBudgetExceeded(unsigned long long pairs, unsigned long long budget)
      : ComputeError("clique expansion needs " + std::to_string(pairs) +
                     " pairwise edges, budget is " + std::to_string(budget)),
        pairs(pairs),
        budget(budget) {}
  unsigned long long pairs;
  unsigned long long budget;
};

class NotADistribution : public ComputeError {
 public:
  NotADistribution() : ComputeError("vector is not a distribution (negative entries or mass != 1)") {}
};

class InvalidParameter : public ComputeError {
 public:
  using ComputeError::ComputeError;
};

}  // namespace hyperppr
