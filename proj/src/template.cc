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

#include "typic/template.h"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "typic/error.h"
#include "typic/utf8.h"

namespace typic {
namespace {

constexpr struct {
  Dimension dimension;
  std::string_view name;
} kDimensions[] = {
    {Dimension::kLocalAcceptability, "LocalAcceptability"},
    {Dimension::kLocalSufficiency, "LocalSufficiency"},
    {Dimension::kLocalRelevance, "LocalRelevance"},
    {Dimension::kClarity, "Clarity"},
    {Dimension::kGlobalRelevance, "GlobalRelevance"},
    {Dimension::kGlobalSufficiency, "GlobalSufficiency"},
};

bool IsSlotNameChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

void CheckSlotName(std::string_view name) {
  if (name.empty()) {
    throw Error(ErrorCode::kEmptySlotName, "empty slot name '{}'");
  }
  if (!std::all_of(name.begin(), name.end(), IsSlotNameChar)) {
    throw Error(ErrorCode::kInvalidSlotName,
                "invalid slot name '" + std::string(name) + "'");
  }
}

std::string JoinSlots(const std::vector<SlotName> &slots) {
  std::string out = "{";
  for (size_t i = 0; i < slots.size(); ++i) {
    if (i > 0) out += ",";
    out += slots[i];
  }
  return out + "}";
}

[[noreturn]] void Violation(const std::string &id, const std::string &reason) {
  throw Error(ErrorCode::kInvariantViolation, id + ": " + reason);
}

}  // namespace

std::string_view DimensionName(Dimension dimension) {
  for (const auto &entry : kDimensions) {
    if (entry.dimension == dimension) return entry.name;
  }
  return "";
}

Dimension ParseDimension(std::string_view name) {
  for (const auto &entry : kDimensions) {
    if (entry.name == name) return entry.dimension;
  }
  throw Error(ErrorCode::kSchemaError,
              "unknown dimension '" + std::string(name) + "'");
}

TemplatePattern::TemplatePattern(std::vector<Segment> segments)
    : segments_(std::move(segments)) {
  std::set<std::string> seen;
  for (const Segment &segment : segments_) {
    if (segment.is_slot()) {
      CheckSlotName(segment.text);
      if (!seen.insert(segment.text).second) {
        throw Error(ErrorCode::kDuplicateSlot,
                    "slot '" + segment.text + "' referenced twice");
      }
    } else if (segment.text.find_first_of("{}") != std::string::npos) {
      throw Error(ErrorCode::kUnbalancedBraces,
                  "literal segment contains a brace");
    }
  }
  if (seen.empty()) {
    throw Error(ErrorCode::kNoSlots, "pattern has no slots");
  }
}

std::vector<SlotName> TemplatePattern::slots() const {
  std::vector<SlotName> out;
  for (const Segment &segment : segments_) {
    if (segment.is_slot()) out.push_back(segment.text);
  }
  return out;
}

std::string TemplatePattern::ToString() const {
  std::string out;
  for (const Segment &segment : segments_) {
    if (segment.is_slot()) {
      out += '{';
      out += segment.text;
      out += '}';
    } else {
      out += segment.text;
    }
  }
  return out;
}

TemplatePattern ParsePattern(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "pattern text is empty");
  }
  std::vector<Segment> segments;
  std::string literal;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '}') {
      throw Error(ErrorCode::kUnbalancedBraces,
                  "unmatched '}' at byte " + std::to_string(i));
    }
    if (c != '{') {
      literal += c;
      ++i;
      continue;
    }
    size_t close = text.find_first_of("{}", i + 1);
    if (close == std::string_view::npos || text[close] == '{') {
      throw Error(ErrorCode::kUnbalancedBraces,
                  "unclosed '{' at byte " + std::to_string(i));
    }
    if (!literal.empty()) {
      segments.push_back(Segment::Literal(std::move(literal)));
      literal.clear();
    }
    std::string name(text.substr(i + 1, close - i - 1));
    CheckSlotName(name);
    segments.push_back(Segment::Slot(std::move(name)));
    i = close + 1;
  }
  if (!literal.empty()) segments.push_back(Segment::Literal(std::move(literal)));
  return TemplatePattern(std::move(segments));
}

void ValidateTemplate(const Template &tmpl) {
  static const std::regex kIdGrammar("[A-Z]{2,3}[0-9]");
  if (!std::regex_match(tmpl.id, kIdGrammar)) {
    Violation(tmpl.id, "id does not match [A-Z]{2,3}[0-9]");
  }
  if (tmpl.slots.empty() || tmpl.slots.size() > 3) {
    Violation(tmpl.id, "needs 1 to 3 slots, has " +
                           std::to_string(tmpl.slots.size()));
  }
  std::set<SlotName> declared(tmpl.slots.begin(), tmpl.slots.end());
  if (declared.size() != tmpl.slots.size()) {
    Violation(tmpl.id, "slot list repeats a name");
  }
  if (tmpl.surface_forms.empty()) {
    Violation(tmpl.id, "no surface forms");
  }
  for (const auto &[locale, pattern] : tmpl.surface_forms) {
    std::vector<SlotName> used = pattern.slots();
    if (std::set<SlotName>(used.begin(), used.end()) != declared) {
      Violation(tmpl.id, "surface form '" + locale + "' uses slots " +
                             JoinSlots(used) + " but template declares " +
                             JoinSlots(tmpl.slots));
    }
  }
}

std::string Render(const Template &tmpl, std::string_view locale,
                   const FillerMap &fillers) {
  auto form = tmpl.surface_forms.find(std::string(locale));
  if (form == tmpl.surface_forms.end()) {
    throw Error(ErrorCode::kUnknownLocale, tmpl.id + " has no surface form '" +
                                               std::string(locale) + "'");
  }
  for (const SlotName &slot : tmpl.slots) {
    if (!fillers.contains(slot)) {
      throw Error(ErrorCode::kMissingFiller,
                  tmpl.id + ": missing filler for slot '" + slot + "'");
    }
  }
  for (const auto &[slot, text] : fillers) {
    if (std::find(tmpl.slots.begin(), tmpl.slots.end(), slot) ==
        tmpl.slots.end()) {
      throw Error(ErrorCode::kExtraFiller,
                  tmpl.id + ": no slot named '" + slot + "'");
    }
  }
  std::string out;
  for (const Segment &segment : form->second.segments()) {
    out += segment.is_slot() ? fillers.at(segment.text) : segment.text;
  }
  return out;
}

TemplateSet::TemplateSet(std::string version, std::vector<Template> templates)
    : version_(std::move(version)), templates_(std::move(templates)) {
  for (size_t i = 0; i < templates_.size(); ++i) {
    const Template &tmpl = templates_[i];
    ValidateTemplate(tmpl);
    if (tmpl.id == kNotApplicable) {
      Violation(tmpl.id, "NotApplicable is reserved");
    }
    if (!index_.emplace(tmpl.id, i).second) {
      Violation(tmpl.id, "duplicate template id");
    }
  }
}

const Template *TemplateSet::Find(std::string_view id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &templates_[it->second];
}

const Template &TemplateSet::Get(std::string_view id) const {
  const Template *tmpl = Find(id);
  if (tmpl == nullptr) {
    throw Error(ErrorCode::kUnknownTemplate,
                "unknown template '" + std::string(id) + "'");
  }
  return *tmpl;
}

std::optional<size_t> TemplateSet::IndexOf(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool TemplateSet::IsValidLabel(const Label &label) const {
  return label.is_not_applicable() || Find(label.name()) != nullptr;
}

TemplateSet LoadTemplateSet(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kSchemaError,
                std::string("template set is not JSON: ") + e.what());
  }
  std::string version;
  std::vector<Template> templates;
  try {
    version = doc.at("version").get<std::string>();
    for (const auto &entry : doc.at("templates")) {
      Template tmpl;
      tmpl.id = entry.at("id").get<std::string>();
      tmpl.dimension = ParseDimension(entry.at("dimension").get<std::string>());
      tmpl.slots = entry.at("slots").get<std::vector<SlotName>>();
      for (const auto &[locale, text] : entry.at("surface_forms").items()) {
        try {
          tmpl.surface_forms.emplace(locale,
                                     ParsePattern(text.get<std::string>()));
        } catch (const Error &e) {
          Violation(tmpl.id, "surface form '" + locale + "': " +
                                 std::string(ErrorCodeName(e.code())) + ": " +
                                 e.what());
        }
      }
      templates.push_back(std::move(tmpl));
    }
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kSchemaError,
                std::string("template set schema: ") + e.what());
  }
  return TemplateSet(std::move(version), std::move(templates));
}

TemplateSet LoadTemplateSetFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return LoadTemplateSet(buffer.str());
}

nlohmann::json TemplateSetToJson(const TemplateSet &set) {
  nlohmann::json templates = nlohmann::json::array();
  for (const Template &tmpl : set.templates()) {
    nlohmann::json forms = nlohmann::json::object();
    for (const auto &[locale, pattern] : tmpl.surface_forms) {
      forms[locale] = pattern.ToString();
    }
    templates.push_back({{"id", tmpl.id},
                         {"dimension", DimensionName(tmpl.dimension)},
                         {"slots", tmpl.slots},
                         {"surface_forms", forms}});
  }
  return {{"version", set.version()}, {"templates", templates}};
}

}  // namespace typic
