#include "gqlrdf/term.hpp"

#include <functional>
#include <stdexcept>

namespace gqlrdf {

std::size_t TermHash::operator()(const Term& t) const {
  std::size_t h = std::hash<std::string>{}(t.lexical);
  h ^= static_cast<std::size_t>(t.kind) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  if (t.datatype) h ^= std::hash<std::string>{}(*t.datatype) + 0x9e3779b9 + (h << 6) + (h >> 2);
  if (t.language) h ^= std::hash<std::string>{}(*t.language) + 0x7f4a7c15 + (h << 6) + (h >> 2);
  return h;
}

TermId Dictionary::intern(const Term& t) {
  auto it = ids_.find(t);
  if (it != ids_.end()) return it->second;
  TermId id = static_cast<TermId>(terms_.size());
  terms_.push_back(t);
  ids_.emplace(t, id);
  return id;
}

std::optional<TermId> Dictionary::lookup(const Term& t) const {
  auto it = ids_.find(t);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const Term& Dictionary::term(TermId id) const {
  if (id >= terms_.size()) throw std::out_of_range("term id out of range");
  return terms_[id];
}

}  // namespace gqlrdf
