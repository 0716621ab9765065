// Copyright 2026 The TYPIC Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TYPIC_TEMPLATE_H_
#define TYPIC_TEMPLATE_H_

#include <compare>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace typic {

// Argumentation quality dimension a template belongs to.
enum class Dimension {
  kLocalAcceptability,
  kLocalSufficiency,
  kLocalRelevance,
  kClarity,
  kGlobalRelevance,
  kGlobalSufficiency,
};

std::string_view DimensionName(Dimension dimension);
// Throws Error(kSchemaError) on an unknown name.
Dimension ParseDimension(std::string_view name);

using SlotName = std::string;

// Slot name to filler phrase.
using FillerMap = std::map<SlotName, std::string>;

// One piece of a surface form: literal text or a reference to a slot.
struct Segment {
  enum class Kind { kLiteral, kSlot };

  static Segment Literal(std::string text) {
    return {Kind::kLiteral, std::move(text)};
  }
  static Segment Slot(SlotName name) { return {Kind::kSlot, std::move(name)}; }

  bool is_slot() const { return kind == Kind::kSlot; }

  bool operator==(const Segment &other) const = default;

  Kind kind;
  // Literal text, or the slot name for slot segments.
  std::string text;
};

// A parsed surface form such as "It is unclear why {x} causes {y}".
// Placeholders are written {name}; names match [A-Za-z0-9_]+. Every pattern
// references at least one slot and no slot twice.
class TemplatePattern {
 public:
  // Validates the segment list; throws the same errors as ParsePattern.
  explicit TemplatePattern(std::vector<Segment> segments);

  const std::vector<Segment> &segments() const { return segments_; }

  // Slot names in order of appearance.
  std::vector<SlotName> slots() const;

  // Storage form; ParsePattern(p.ToString()) == p and, for any parsed text,
  // ParsePattern(text).ToString() == text.
  std::string ToString() const;

  bool operator==(const TemplatePattern &other) const = default;

 private:
  std::vector<Segment> segments_;
};

// Errors: kUnbalancedBraces, kEmptySlotName, kInvalidSlotName,
// kDuplicateSlot, kNoSlots, kInvalidArgument (empty text).
TemplatePattern ParsePattern(std::string_view text);

struct Template {
  std::string id;  // category code, e.g. "CA2"
  Dimension dimension = Dimension::kLocalAcceptability;
  std::vector<SlotName> slots;
  std::map<std::string, TemplatePattern> surface_forms;  // locale -> form

  // Slot count for quick arity checks.
  size_t arity() const { return slots.size(); }
};

// Throws Error(kInvariantViolation) naming the template id and reason.
void ValidateTemplate(const Template &tmpl);

// Substitutes fillers into the surface form for `locale`.
// Errors: kUnknownLocale, kMissingFiller, kExtraFiller.
std::string Render(const Template &tmpl, std::string_view locale,
                   const FillerMap &fillers);

inline constexpr std::string_view kNotApplicable = "NotApplicable";

// Outcome of template selection: a template id or the NotApplicable
// sentinel. NotApplicable is not a template, has no slots and never renders.
class Label {
 public:
  static Label NotApplicable() { return Label(std::string(kNotApplicable)); }
  static Label Template(std::string id) { return Label(std::move(id)); }
  // "NotApplicable" maps to the sentinel, anything else to a template id.
  static Label Parse(std::string_view text) { return Label(std::string(text)); }

  bool is_not_applicable() const { return name_ == kNotApplicable; }
  // Template id, or "NotApplicable".
  const std::string &name() const { return name_; }

  auto operator<=>(const Label &other) const = default;

 private:
  explicit Label(std::string name) : name_(std::move(name)) {}

  std::string name_;
};

// An ordered, validated collection of templates.
class TemplateSet {
 public:
  // Throws Error(kInvariantViolation) when a template is invalid or ids
  // repeat.
  TemplateSet(std::string version, std::vector<Template> templates);

  const std::string &version() const { return version_; }
  const std::vector<Template> &templates() const { return templates_; }
  size_t size() const { return templates_.size(); }

  // nullptr when absent.
  const Template *Find(std::string_view id) const;
  // Throws Error(kUnknownTemplate).
  const Template &Get(std::string_view id) const;
  std::optional<size_t> IndexOf(std::string_view id) const;

  // True for NotApplicable and every id in the set.
  bool IsValidLabel(const Label &label) const;

 private:
  std::string version_;
  std::vector<Template> templates_;
  std::map<std::string, size_t, std::less<>> index_;
};

// Parses the template-set document:
//   {"version": str, "templates": [{"id", "dimension", "slots",
//    "surface_forms": {locale: pattern}}]}
// Errors: kSchemaError for structural problems, kInvariantViolation when a
// template breaks an invariant.
TemplateSet LoadTemplateSet(std::string_view document);
TemplateSet LoadTemplateSetFile(const std::filesystem::path &path);

nlohmann::json TemplateSetToJson(const TemplateSet &set);

}  // namespace typic

#endif  // TYPIC_TEMPLATE_H_
