#include "adgate/domain.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include "adgate/errors.hpp"
#include "adgate/version.hpp"
#include "json.hpp"

namespace adgate {

namespace {

using nlohmann::ordered_json;

bool is_sentence_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

bool is_lower_trimmed(const std::string& term) {
  if (term.empty()) return false;
  if (std::isspace(static_cast<unsigned char>(term.front())) ||
      std::isspace(static_cast<unsigned char>(term.back()))) {
    return false;
  }
  return std::none_of(term.begin(), term.end(), [](char c) {
    return std::isupper(static_cast<unsigned char>(c));
  });
}

std::vector<std::string> sorted_unique(std::vector<std::string> terms) {
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  return terms;
}

const char* kGateQuestionFood =
    "Carefully analyze the image and the text. Answer yes or no only: Is "
    "there prepared human food visible (e.g., pizza, toast, sandwich, salad) "
    "or is the context food-related?";
const char* kGateQuestionCar =
    "Carefully analyze the image and the text. Answer yes or no only: Is "
    "there a car or other road vehicle visible or is the context car-related?";
const char* kGateQuestionAnimal =
    "Carefully analyze the image and the text. Answer yes or no only: Is "
    "there an animal visible or is the context animal-related?";

DomainSpec builtin_food() {
  DomainSpec spec;
  spec.domain_id = "food";
  spec.concept_name = "food";
  spec.slogan = "Visit Food.com for the best healthy food deals and selection.";
  spec.teacher_gate_question = kGateQuestionFood;
  spec.keyword_lexicon = sorted_unique({
      "food",      "meal",      "dish",      "snack",     "coffee",
      "pizza",     "burger",    "fruit",     "breakfast", "lunch",
      "dinner",    "dessert",   "cake",      "bread",     "toast",
      "sandwich",  "salad",     "soup",      "pasta",     "noodle",
      "rice",      "sushi",     "taco",      "burrito",   "steak",
      "chicken",   "beef",      "pork",      "fish",      "seafood",
      "shrimp",    "cheese",    "egg",       "vegetable", "tomato",
      "potato",    "carrot",    "onion",     "mushroom",  "apple",
      "banana",    "orange",    "berry",     "grape",     "juice",
      "tea",       "milk",      "chocolate", "cookie",    "pie",
      "donut",     "pancake",   "waffle",    "cereal",    "bacon",
      "sausage",   "hotdog",    "fries",     "ketchup",   "restaurant",
      "kitchen",   "recipe",    "bakery",    "wine",      "beer",
  });
  return spec;
}

DomainSpec builtin_car() {
  DomainSpec spec;
  spec.domain_id = "car";
  spec.concept_name = "car";
  spec.slogan = "Visit Car.com for the best car deals and selection.";
  spec.teacher_gate_question = kGateQuestionCar;
  spec.keyword_lexicon = sorted_unique({
      "car",        "vehicle",     "truck",      "bus",        "van",
      "suv",        "sedan",       "coupe",      "convertible","motorcycle",
      "engine",     "wheel",       "tire",       "brake",      "headlight",
      "bumper",     "windshield",  "dashboard",  "steering",   "transmission",
      "highway",    "traffic",     "driver",     "driving",    "garage",
      "parking",    "taxi",        "jeep",       "pickup",     "trailer",
      "minivan",    "automobile",  "horsepower", "mileage",    "fuel",
      "gasoline",   "diesel",      "motor",      "roadster",   "limousine",
  });
  return spec;
}

DomainSpec builtin_animal() {
  DomainSpec spec;
  spec.domain_id = "animal";
  spec.concept_name = "animal";
  spec.slogan =
      "Visit ZooTrips.com to plan unforgettable trips to zoos and wildlife "
      "parks.";
  spec.teacher_gate_question = kGateQuestionAnimal;
  spec.keyword_lexicon = sorted_unique({
      "animal",   "dog",      "cat",      "horse",    "cow",
      "sheep",    "goat",     "pig",      "bird",     "elephant",
      "lion",     "tiger",    "bear",     "zebra",    "giraffe",
      "monkey",   "rabbit",   "deer",     "fox",      "wolf",
      "squirrel", "mouse",    "snake",    "lizard",   "turtle",
      "frog",     "duck",     "goose",    "eagle",    "owl",
      "parrot",   "penguin",  "dolphin",  "whale",    "shark",
      "seal",     "otter",    "kangaroo", "koala",    "panda",
      "camel",    "zoo",      "wildlife", "pet",      "puppy",
      "kitten",   "paw",      "fur",      "feather",
  });
  return spec;
}

ordered_json domain_to_json(const DomainSpec& spec) {
  ordered_json entry;
  entry["domain_id"] = spec.domain_id;
  entry["concept_name"] = spec.concept_name;
  entry["slogan"] = spec.slogan;
  entry["teacher_gate_question"] = spec.teacher_gate_question;
  entry["keywords"] = spec.keyword_lexicon;
  return entry;
}

DomainSpec domain_from_json(const ordered_json& entry) {
  DomainSpec spec;
  spec.domain_id = entry.at("domain_id").get<std::string>();
  spec.concept_name = entry.at("concept_name").get<std::string>();
  spec.slogan = entry.at("slogan").get<std::string>();
  spec.teacher_gate_question =
      entry.value("teacher_gate_question", std::string());
  spec.keyword_lexicon =
      sorted_unique(entry.at("keywords").get<std::vector<std::string>>());
  return spec;
}

}  // namespace

void DomainSpec::validate() const {
  if (domain_id.empty()) {
    raise(ErrorCode::invalid_argument, "domain_id must be non-empty");
  }
  if (slogan.empty() || !is_sentence_terminator(slogan.back())) {
    raise(ErrorCode::invalid_argument,
          "slogan for '" + domain_id +
              "' must be non-empty and end with sentence punctuation");
  }
  if (keyword_lexicon.empty()) {
    raise(ErrorCode::invalid_argument,
          "keyword lexicon for '" + domain_id + "' must be non-empty");
  }
  for (const auto& term : keyword_lexicon) {
    if (!is_lower_trimmed(term)) {
      raise(ErrorCode::invalid_argument,
            "keyword '" + term + "' in '" + domain_id +
                "' must be lowercase with no surrounding whitespace");
    }
  }
}

IntentLexicon IntentLexicon::defaults() {
  IntentLexicon lexicon;
  lexicon.terms = sorted_unique({"recommend", "recommendation", "suggest",
                                 "recomend", "reccomend", "sugest", "suggst"});
  return lexicon;
}

void IntentLexicon::validate() const {
  if (terms.empty()) {
    raise(ErrorCode::invalid_argument, "intent lexicon must be non-empty");
  }
  for (const auto& term : terms) {
    if (!is_lower_trimmed(term)) {
      raise(ErrorCode::invalid_argument,
            "intent term '" + term + "' must be lowercase and trimmed");
    }
  }
}

Catalog::Catalog(std::vector<DomainSpec> domains, IntentLexicon intent)
    : domains_(std::move(domains)), intent_(std::move(intent)) {
  validate();
}

void Catalog::validate() const {
  intent_.validate();
  std::set<std::string> seen;
  for (const auto& spec : domains_) {
    spec.validate();
    if (!seen.insert(spec.domain_id).second) {
      raise(ErrorCode::invalid_argument,
            "duplicate domain_id in catalog: " + spec.domain_id);
    }
  }
}

Catalog Catalog::builtin() {
  return Catalog({builtin_food(), builtin_car(), builtin_animal()},
                 IntentLexicon::defaults());
}

Catalog Catalog::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    raise(ErrorCode::io_error, "cannot open catalog file: " + file.string());
  }
  ordered_json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    raise(ErrorCode::config_error,
          "catalog parse error in " + file.string() + ": " + e.what());
  }
  IntentLexicon intent;
  if (doc.contains("intent_lexicon")) {
    intent.terms =
        sorted_unique(doc.at("intent_lexicon").get<std::vector<std::string>>());
  } else {
    intent = IntentLexicon::defaults();
  }
  std::vector<DomainSpec> domains;
  for (const auto& entry : doc.at("domains")) {
    domains.push_back(domain_from_json(entry));
  }
  return Catalog(std::move(domains), std::move(intent));
}

void Catalog::save(const std::filesystem::path& file) const {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["intent_lexicon"] = intent_.terms;
  doc["domains"] = ordered_json::array();
  for (const auto& spec : domains_) {
    doc["domains"].push_back(domain_to_json(spec));
  }
  std::ofstream out(file);
  if (!out) {
    raise(ErrorCode::io_error, "cannot write catalog file: " + file.string());
  }
  out << doc.dump(2) << "\n";
}

const DomainSpec& Catalog::domain(std::string_view domain_id) const {
  if (const auto* spec = find(domain_id)) return *spec;
  raise(ErrorCode::unknown_domain,
        "domain not in catalog: " + std::string(domain_id));
}

const DomainSpec* Catalog::find(std::string_view domain_id) const {
  for (const auto& spec : domains_) {
    if (spec.domain_id == domain_id) return &spec;
  }
  return nullptr;
}

Catalog Catalog::subset(const std::vector<std::string>& domain_ids) const {
  std::vector<DomainSpec> picked;
  for (const auto& id : domain_ids) picked.push_back(domain(id));
  return Catalog(std::move(picked), intent_);
}

}  // namespace adgate
