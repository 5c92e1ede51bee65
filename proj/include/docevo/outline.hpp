/*
 * Copyright 2026 The Docevo Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef DOCEVO_OUTLINE_HPP
#define DOCEVO_OUTLINE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace docevo {

// Hierarchy is fixed at three levels: Section > Subsection > Paragraph.
// Deeper nesting found in source documents is flattened at parse time.
enum class NodeKind { Section, Subsection, Paragraph };

const char* node_kind_name(NodeKind kind);

struct OutlineNode {
    std::string id;        // unique within the tree, stable across edits
    NodeKind kind = NodeKind::Paragraph;
    std::string heading;   // Section/Subsection only
    std::string content;   // Paragraph only
    std::vector<std::string> citations;  // Paragraph only; ordered, deduplicated
    std::vector<OutlineNode> children;   // empty for Paragraph; order significant

    bool operator==(const OutlineNode&) const = default;
};

OutlineNode make_section(std::string id, std::string heading);
OutlineNode make_subsection(std::string id, std::string heading);
OutlineNode make_paragraph(std::string id, std::string content,
                           std::vector<std::string> citations = {});

struct TreeMeta {
    std::string source_id;
    std::string category;
    std::string subcategory;

    bool operator==(const TreeMeta&) const = default;
};

// An outline state. Trees are immutable value snapshots: every editing
// operation copies and returns a new tree.
struct OutlineTree {
    std::string title;
    std::vector<OutlineNode> root_sections;
    TreeMeta meta;

    bool operator==(const OutlineTree&) const = default;
};

OutlineTree empty_outline(std::string title);

struct Violation {
    std::string node_id;  // empty for tree-level violations
    std::string rule;
    std::string message;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;
};

// State: structural invariants only (well-formed intermediate states).
// CompleteArticle: adds the completeness rules — at least one section,
// no empty headings, no empty paragraph content.
enum class ValidationProfile { State, CompleteArticle };

ValidationReport validate_tree(const OutlineTree& tree, ValidationProfile profile);

inline ValidationReport validate_article(const OutlineTree& tree) {
    return validate_tree(tree, ValidationProfile::CompleteArticle);
}

// Canonical serialization: JSON with sorted object keys, arrays in tree
// order, no insignificant whitespace. Top-level keys {meta, sections, title};
// heading nodes are {children, heading, id}, paragraphs {citations, content, id}.
// Node kinds are recovered from shape and depth on parse.
// Throws Errc::InvalidTree when structural invariants fail.
std::string canonical_form(const OutlineTree& tree);

// Inverse of canonical_form. Accepts any JSON equivalent to the canonical
// layout; throws Errc::InvalidTree on malformed input or invariant violations.
OutlineTree parse_canonical(const std::string& text);

// FNV-1a 64 over canonical_form, hex-encoded. Equal trees => equal digests.
std::string tree_digest(const OutlineTree& tree);

// JSON converters behind canonical_form/parse_canonical, exposed for wire
// formats that embed nodes or whole trees (diff payloads, instance files).
// depth_hint drives kind recovery for heading nodes (0 = root section).
nlohmann::json node_to_json(const OutlineNode& node);
OutlineNode node_from_json(const nlohmann::json& j, std::size_t depth_hint);
nlohmann::json tree_to_json(const OutlineTree& tree);
OutlineTree tree_from_json(const nlohmann::json& j);

const OutlineNode* find_node(const OutlineTree& tree, const std::string& id);

struct NodeLocation {
    const OutlineNode* node = nullptr;
    const OutlineNode* parent = nullptr;  // nullptr when the node is a root section
    std::size_t index = 0;                // position within the parent's child list
    std::size_t depth = 0;                // 0 = root section
};

std::optional<NodeLocation> locate_node(const OutlineTree& tree, const std::string& id);

// Heading path from root to the node, e.g. "Methods > Data".
std::string section_path(const OutlineTree& tree, const std::string& id);

std::size_t node_count(const OutlineTree& tree);

void for_each_node(const OutlineTree& tree,
                   const std::function<void(const OutlineNode&, std::size_t depth)>& fn);

std::vector<const OutlineNode*> paragraphs_of(const OutlineTree& tree);

// Smallest unused "<prefix><k>" id, with k strictly above every numeric
// suffix already present for that prefix, so ids keep growing even when
// earlier nodes were deleted and reinserted.
std::string allocate_id(const OutlineTree& tree, const std::string& prefix);

}  // namespace docevo

#endif  // DOCEVO_OUTLINE_HPP
