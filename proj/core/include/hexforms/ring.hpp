// Variable table shared by polynomials: an ordered list of named symbols,
// some of which are "radical" variables w carrying a rewrite rule w^2 -> square.
// Relations are triangular: the square of a radical may only involve
// variables declared before it.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hexforms/errors.hpp"

namespace hexforms {

class Poly;

class Ring {
 public:
  static std::shared_ptr<Ring> make(std::vector<std::string> names);

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::string& name(int idx) const { return names_[idx]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;

  bool has_relation(int idx) const { return squares_[idx] != nullptr; }
  const Poly& square_of(int idx) const;

  // Setup-phase only: attach w^2 = square for variable idx. The square must be
  // a polynomial of this ring in variables declared strictly before idx.
  void install_relation(int idx, const Poly& square);

  bool any_relations() const;
  bool same_content(const Ring& other) const;

 private:
  Ring() = default;
  std::vector<std::string> names_;
  std::vector<std::shared_ptr<const Poly>> squares_;
};

using RingPtr = std::shared_ptr<const Ring>;

}  // namespace hexforms
