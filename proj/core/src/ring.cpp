#include "hexforms/ring.hpp"

#include <algorithm>
#include <set>

#include "hexforms/poly.hpp"

namespace hexforms {

std::shared_ptr<Ring> Ring::make(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || n == "i")
      fail(ErrorKind::ParseError, "reserved or empty variable name: '" + n + "'");
    if (!seen.insert(n).second)
      fail(ErrorKind::ParseError, "duplicate variable name: " + n);
  }
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->names_ = std::move(names);
  ring->squares_.assign(ring->names_.size(), nullptr);
  return ring;
}

int Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

const Poly& Ring::square_of(int idx) const {
  if (!squares_[idx]) fail(ErrorKind::Internal, "variable has no radical relation");
  return *squares_[idx];
}

void Ring::install_relation(int idx, const Poly& square) {
  if (idx < 0 || idx >= nvars()) fail(ErrorKind::Internal, "relation index out of range");
  for (const auto& [mono, c] : square.terms()) {
    for (int v = idx; v < nvars(); ++v) {
      if (v < static_cast<int>(mono.size()) && mono[v] != 0)
        fail(ErrorKind::ParseError,
             "radical relation for " + names_[idx] + " must only use earlier variables");
    }
  }
  squares_[idx] = std::make_shared<const Poly>(square);
}

bool Ring::any_relations() const {
  for (const auto& s : squares_)
    if (s) return true;
  return false;
}

bool Ring::same_content(const Ring& other) const {
  if (names_ != other.names_) return false;
  for (int v = 0; v < nvars(); ++v) {
    bool a = squares_[v] != nullptr, b = other.squares_[v] != nullptr;
    if (a != b) return false;
    if (a && !(*squares_[v] == *other.squares_[v])) return false;
  }
  return true;
}

}  // namespace hexforms
