#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pha/grading.hpp"
#include "pha/kcategory.hpp"
#include "pha/morita.hpp"

namespace pha::io {

using json = nlohmann::json;

// PHA_FIELD, then rational
Field default_field();

Scalar scalar_from(const json& j, Field f, const std::string& where);
Vec vec_from(const json& j, Field f, const std::string& where);
Mat mat_from(const json& j, Field f, const std::string& where);

json to_json(const Scalar& s);
json to_json(const Vec& v);
json to_json(const Mat& m);
json to_json(const Report& r);
json to_json(const FDAlgebra& a);
json to_json(const HopfAlgebra& h);
json to_json(const ActionBase& a);
json to_json(const GlobalizationResult& g);
json to_json(const Bimodule& m);
json to_json(const MoritaContextData& c);
json to_json(const PartialGroupAction& p);
json to_json(const FiniteKCategory& c);

std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t h);

struct Source {
  std::string file;
  std::string hash;
};

// Documents loaded from one or more files; references by name resolve across all of them.
class Library {
 public:
  explicit Library(std::optional<Field> field = std::nullopt) : default_(field ? *field : default_field()) {}

  // Returns the documents of the file in order. A file holds one document or {"documents": [...]}.
  std::vector<json> load_file(const std::string& path);
  void add(const json& doc, const Source& src);

  const std::vector<Source>& sources() const { return sources_; }
  const json& by_name(const std::string& name) const;
  // string -> named document, object -> inline
  const json& resolve(const json& ref, const std::string& kind, const std::string& where) const;

  // the document's own "field", else the library default
  Field field_of(const json& doc) const;

  FiniteGroup group(const json& ref) const;
  HopfAlgebra hopf(const json& ref) const;
  // checked = false keeps a nonassociative table so that verify can report on it
  FDAlgebra algebra(const json& ref, bool checked = true) const;
  PartialAction action(const json& ref) const;
  GoodGradingSpec grading(const json& ref) const;
  PartialGroupAction group_action(const json& ref) const;
  GlobalizationResult globalization(const json& ref, PartialAction* pa = nullptr) const;
  MoritaContextData context(const json& ref) const;
  std::optional<ActionEquivalenceData> equivalence(const json& ref) const;
  FiniteKCategory category(const json& ref) const;
  CModule category_module(const json& ref, const FiniteKCategory& c) const;
  LeftModule module(const json& ref, const FDAlgebra& a) const;
  LocalUnitSystem local_units(const json& ref, const FDAlgebra& a) const;

 private:
  Field default_;
  std::map<std::string, json> named_;
  std::vector<Source> sources_;
  std::vector<json> anonymous_;
};

}  // namespace pha::io
