#pragma once

#include <stdexcept>
#include <string>

namespace gsimrac {

// Error taxonomy used across the toolkit:
//   std::invalid_argument — caller handed us unusable input (usage errors)
//   std::domain_error     — input is well-formed but outside the operation's domain
//   std::logic_error      — an internal guarantee failed; indicates a bug
//   precision_error       — a geometric construction ran out of floating-point room
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gsimrac
