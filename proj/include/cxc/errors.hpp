#pragma once

#include <stdexcept>
#include <string>

namespace cxc {

/// Malformed usage or input (bad ids, unparsable files, invalid plans).
/// CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input graph is not a valid cube complex 1-skeleton (fails the
/// median axiom or a wall invariant). Also exit code 2 at the CLI.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its stated contract, e.g. projecting
/// onto a non-convex set.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generated hull reached the truncation shell of its ambient ball;
/// re-run with a larger ambient radius.
class EnlargementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cxc
