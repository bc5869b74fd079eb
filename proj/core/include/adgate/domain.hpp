#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace adgate {

/// One advertisement target: the semantic concept, its text-side keyword
/// lexicon, the exact slogan payload and the yes/no question used to verify
/// the concept in images.
struct DomainSpec {
  std::string domain_id;
  std::string concept_name;
  std::vector<std::string> keyword_lexicon;  // lowercase, trimmed, sorted
  std::string slogan;
  std::string teacher_gate_question;

  /// Throws Error{invalid_argument} when any field invariant is broken:
  /// non-empty slogan ending in sentence punctuation, non-empty lowercase
  /// lexicon entries without surrounding whitespace.
  void validate() const;
};

/// Recommendation-seeking cue words, canonical stems plus common typos.
/// Matching is prefix-stem at word boundaries, so "recommend" also covers
/// "recommendations" and "reccomend" covers "reccomendation".
struct IntentLexicon {
  std::vector<std::string> terms;

  static IntentLexicon defaults();
  void validate() const;
};

/// The set of domains a run knows about plus the intent lexicon. Ships with
/// built-in food/car/animal entries; overridable from a JSON catalog file.
class Catalog {
 public:
  Catalog() = default;
  Catalog(std::vector<DomainSpec> domains, IntentLexicon intent);

  static Catalog builtin();
  static Catalog load(const std::filesystem::path& file);
  void save(const std::filesystem::path& file) const;

  const std::vector<DomainSpec>& domains() const { return domains_; }
  const IntentLexicon& intent_lexicon() const { return intent_; }

  /// Throws Error{unknown_domain} when absent.
  const DomainSpec& domain(std::string_view domain_id) const;
  const DomainSpec* find(std::string_view domain_id) const;

  /// Restricts the catalog to the given ids (order preserved).
  Catalog subset(const std::vector<std::string>& domain_ids) const;

 private:
  void validate() const;

  std::vector<DomainSpec> domains_;
  IntentLexicon intent_;
};

}  // namespace adgate
