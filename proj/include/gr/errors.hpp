#pragma once

#include <stdexcept>
#include <string>

namespace gr {

// Thrown when an input set is too small for the stage that needed it.  The
// stage name makes it possible to tell a caller-fixable size problem from an
// algorithmic bug.
struct SizeTooSmall : std::runtime_error {
	std::string stage;
	SizeTooSmall(std::string st, const std::string& what)
	    : std::runtime_error(st + ": " + what), stage(std::move(st)) {}
};

// Thrown when a step that is guaranteed to succeed under the documented
// preconditions fails anyway.  Always a bug, never a recoverable condition.
struct InternalContradiction : std::logic_error {
	explicit InternalContradiction(const std::string& what) : std::logic_error(what) {}
};

struct BadInput : std::runtime_error {
	explicit BadInput(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gr
