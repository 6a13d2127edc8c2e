#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gqlrdf {

// Dense integer handle for a dictionary-encoded RDF term.
using TermId = std::uint32_t;
constexpr TermId kInvalidTerm = ~TermId{0};

enum class TermKind : std::uint8_t { Iri, Literal };

// An RDF term. IRIs carry no datatype or language tag; a literal carries at
// most one of the two.
struct Term {
  TermKind kind = TermKind::Iri;
  std::string lexical;
  std::optional<std::string> datatype;
  std::optional<std::string> language;

  static Term iri(std::string text) { return Term{TermKind::Iri, std::move(text), {}, {}}; }
  static Term literal(std::string text) { return Term{TermKind::Literal, std::move(text), {}, {}}; }
  static Term typed_literal(std::string text, std::string dt) {
    return Term{TermKind::Literal, std::move(text), std::move(dt), {}};
  }
  static Term lang_literal(std::string text, std::string lang) {
    return Term{TermKind::Literal, std::move(text), {}, std::move(lang)};
  }

  bool is_iri() const { return kind == TermKind::Iri; }
  bool operator==(const Term&) const = default;
};

struct TermHash {
  std::size_t operator()(const Term& t) const;
};

// A dictionary-encoded triple. Subject and predicate always decode to IRIs.
struct Triple {
  TermId subject = kInvalidTerm;
  TermId predicate = kInvalidTerm;
  TermId object = kInvalidTerm;

  bool operator==(const Triple&) const = default;
};

// Bijection Term <-> TermId over all terms seen at load time. Ids are dense
// and assigned in first-seen order, so the assignment is deterministic for a
// fixed input.
class Dictionary {
 public:
  TermId intern(const Term& t);
  std::optional<TermId> lookup(const Term& t) const;
  const Term& term(TermId id) const;
  std::size_t size() const { return terms_.size(); }
  bool contains(TermId id) const { return id < terms_.size(); }
  bool is_iri(TermId id) const { return term(id).is_iri(); }

 private:
  std::vector<Term> terms_;
  std::unordered_map<Term, TermId, TermHash> ids_;
};

}  // namespace gqlrdf
