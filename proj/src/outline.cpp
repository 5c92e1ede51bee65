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
#include "docevo/outline.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "docevo/errors.hpp"
#include "docevo/rng.hpp"

namespace docevo {

using nlohmann::json;

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::MalformedAction: return "MalformedAction";
        case Errc::TargetNotFound: return "TargetNotFound";
        case Errc::IllegalStructure: return "IllegalStructure";
        case Errc::NotInvertible: return "NotInvertible";
        case Errc::InvalidTree: return "InvalidTree";
        case Errc::UnparsableDocument: return "UnparsableDocument";
        case Errc::MissingTopic: return "MissingTopic";
        case Errc::NothingToPerturb: return "NothingToPerturb";
        case Errc::EmptyCorpus: return "EmptyCorpus";
        case Errc::ExecutorError: return "ExecutorError";
        case Errc::InvalidSemanticEdit: return "InvalidSemanticEdit";
        case Errc::ReplayMiss: return "ReplayMiss";
        case Errc::InvalidBudget: return "InvalidBudget";
        case Errc::EpisodeOver: return "EpisodeOver";
        case Errc::RewardsAbsent: return "RewardsAbsent";
        case Errc::RolloutAborted: return "RolloutAborted";
        case Errc::IoError: return "IoError";
        case Errc::BadConfig: return "BadConfig";
    }
    return "UnknownError";
}

std::string to_hex64(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[value & 0xF];
        value >>= 4;
    }
    return out;
}

std::size_t Rng::weighted(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double x = unit() * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) continue;
        if (x < weights[i]) return i;
        x -= weights[i];
    }
    // Fall back to the last positive weight (x landed on the total due to rounding).
    for (std::size_t i = weights.size(); i > 0; --i) {
        if (weights[i - 1] > 0.0) return i - 1;
    }
    return 0;
}

const char* node_kind_name(NodeKind kind) {
    switch (kind) {
        case NodeKind::Section: return "section";
        case NodeKind::Subsection: return "subsection";
        case NodeKind::Paragraph: return "paragraph";
    }
    return "unknown";
}

OutlineNode make_section(std::string id, std::string heading) {
    OutlineNode n;
    n.id = std::move(id);
    n.kind = NodeKind::Section;
    n.heading = std::move(heading);
    return n;
}

OutlineNode make_subsection(std::string id, std::string heading) {
    OutlineNode n = make_section(std::move(id), std::move(heading));
    n.kind = NodeKind::Subsection;
    return n;
}

OutlineNode make_paragraph(std::string id, std::string content, std::vector<std::string> citations) {
    OutlineNode n;
    n.id = std::move(id);
    n.kind = NodeKind::Paragraph;
    n.content = std::move(content);
    n.citations = std::move(citations);
    return n;
}

OutlineTree empty_outline(std::string title) {
    OutlineTree t;
    t.title = std::move(title);
    return t;
}

namespace {

void check_node(const OutlineNode& node, std::size_t depth, const OutlineNode* parent,
                ValidationProfile profile, std::unordered_set<std::string>& seen_ids,
                std::vector<Violation>& out) {
    if (node.id.empty()) {
        out.push_back({node.id, "missing id", "node has an empty id"});
    } else if (!seen_ids.insert(node.id).second) {
        out.push_back({node.id, "duplicate id", "id '" + node.id + "' appears more than once"});
    }

    switch (node.kind) {
        case NodeKind::Section:
            if (parent != nullptr) {
                out.push_back({node.id, "section placement", "section must be a root node"});
            }
            break;
        case NodeKind::Subsection:
            if (parent == nullptr || parent->kind != NodeKind::Section) {
                out.push_back({node.id, "subsection placement", "subsection parent must be a section"});
            }
            break;
        case NodeKind::Paragraph:
            if (parent == nullptr ||
                (parent->kind != NodeKind::Section && parent->kind != NodeKind::Subsection)) {
                out.push_back(
                    {node.id, "paragraph placement", "paragraph parent must be a section or subsection"});
            }
            break;
    }

    if (node.kind == NodeKind::Paragraph) {
        if (!node.children.empty()) {
            out.push_back({node.id, "paragraph children", "paragraph nodes cannot have children"});
        }
        if (!node.heading.empty()) {
            out.push_back({node.id, "paragraph heading", "paragraph nodes carry content, not headings"});
        }
        if (profile == ValidationProfile::CompleteArticle && node.content.empty()) {
            out.push_back({node.id, "empty content", "paragraph has no content"});
        }
        std::unordered_set<std::string> keys;
        for (const auto& key : node.citations) {
            if (key.empty()) {
                out.push_back({node.id, "empty citation key", "citation key is empty"});
            } else if (!keys.insert(key).second) {
                out.push_back({node.id, "duplicate citation key", "key '" + key + "' repeats"});
            }
        }
    } else {
        if (!node.content.empty()) {
            out.push_back({node.id, "heading node content", "section-level nodes cannot carry content"});
        }
        if (!node.citations.empty()) {
            out.push_back({node.id, "heading node citations", "only paragraphs carry citations"});
        }
        if (profile == ValidationProfile::CompleteArticle && node.heading.empty()) {
            out.push_back({node.id, "empty heading", "heading is empty"});
        }
    }

    for (const auto& child : node.children) {
        check_node(child, depth + 1, &node, profile, seen_ids, out);
    }
}

}  // namespace

ValidationReport validate_tree(const OutlineTree& tree, ValidationProfile profile) {
    ValidationReport report;
    if (tree.title.empty()) {
        report.violations.push_back({"", "empty title", "outline has no title"});
    }
    if (profile == ValidationProfile::CompleteArticle && tree.root_sections.empty()) {
        report.violations.push_back({"", "no sections", "a complete article needs at least one section"});
    }
    std::unordered_set<std::string> seen_ids;
    for (const auto& section : tree.root_sections) {
        if (section.kind != NodeKind::Section) {
            report.violations.push_back(
                {section.id, "section placement", "root nodes must be sections"});
        }
        check_node(section, 0, nullptr, profile, seen_ids, report.violations);
    }
    report.valid = report.violations.empty();
    return report;
}

json node_to_json(const OutlineNode& node) {
    json j;
    if (node.kind == NodeKind::Paragraph) {
        j["id"] = node.id;
        j["content"] = node.content;
        j["citations"] = node.citations;
    } else {
        j["id"] = node.id;
        j["heading"] = node.heading;
        json children = json::array();
        for (const auto& child : node.children) children.push_back(node_to_json(child));
        j["children"] = std::move(children);
    }
    return j;
}

OutlineNode node_from_json(const json& j, std::size_t depth) {
    if (!j.is_object()) throw Error(Errc::InvalidTree, "node is not an object");
    if (depth > 2) throw Error(Errc::InvalidTree, "node nested beyond paragraph depth");
    if (!j.contains("id") || !j.at("id").is_string())
        throw Error(Errc::InvalidTree, "node is missing a string id");

    OutlineNode node;
    node.id = j.at("id").get<std::string>();

    const bool has_content = j.contains("content");
    const bool has_heading = j.contains("heading") || j.contains("children");
    if (has_content && has_heading)
        throw Error(Errc::InvalidTree, "node '" + node.id + "' mixes paragraph and section fields");

    if (has_content) {
        node.kind = NodeKind::Paragraph;
        node.content = j.at("content").get<std::string>();
        if (j.contains("citations")) {
            for (const auto& key : j.at("citations")) node.citations.push_back(key.get<std::string>());
        }
    } else if (has_heading) {
        if (depth >= 2)
            throw Error(Errc::InvalidTree, "node '" + node.id + "' nests headings deeper than subsection");
        node.kind = depth == 0 ? NodeKind::Section : NodeKind::Subsection;
        node.heading = j.value("heading", std::string());
        if (j.contains("children")) {
            for (const auto& child : j.at("children"))
                node.children.push_back(node_from_json(child, depth + 1));
        }
    } else {
        throw Error(Errc::InvalidTree, "node '" + node.id + "' has neither content nor heading fields");
    }
    return node;
}

namespace {

std::string require_valid(const OutlineTree& tree) {
    auto report = validate_tree(tree, ValidationProfile::State);
    if (!report.valid) {
        std::ostringstream msg;
        msg << "tree violates structural invariants:";
        for (const auto& v : report.violations) msg << " [" << v.rule << "] " << v.message << ";";
        return msg.str();
    }
    return {};
}

}  // namespace

json tree_to_json(const OutlineTree& tree) {
    json j;
    j["title"] = tree.title;
    j["meta"] = {{"category", tree.meta.category},
                 {"source_id", tree.meta.source_id},
                 {"subcategory", tree.meta.subcategory}};
    json sections = json::array();
    for (const auto& section : tree.root_sections) sections.push_back(node_to_json(section));
    j["sections"] = std::move(sections);
    return j;
}

OutlineTree tree_from_json(const json& j) {
    if (!j.is_object() || !j.contains("title") || !j.at("title").is_string())
        throw Error(Errc::InvalidTree, "outline document needs a string title");

    OutlineTree tree;
    tree.title = j.at("title").get<std::string>();
    if (j.contains("meta") && j.at("meta").is_object()) {
        const auto& m = j.at("meta");
        tree.meta.source_id = m.value("source_id", std::string());
        tree.meta.category = m.value("category", std::string());
        tree.meta.subcategory = m.value("subcategory", std::string());
    }
    if (j.contains("sections")) {
        for (const auto& section : j.at("sections"))
            tree.root_sections.push_back(node_from_json(section, 0));
    }
    if (auto msg = require_valid(tree); !msg.empty()) throw Error(Errc::InvalidTree, msg);
    return tree;
}

std::string canonical_form(const OutlineTree& tree) {
    if (auto msg = require_valid(tree); !msg.empty()) throw Error(Errc::InvalidTree, msg);
    return tree_to_json(tree).dump();
}

OutlineTree parse_canonical(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::InvalidTree, std::string("not valid JSON: ") + e.what());
    }
    return tree_from_json(j);
}

std::string tree_digest(const OutlineTree& tree) { return to_hex64(fnv1a64(canonical_form(tree))); }

namespace {

const OutlineNode* find_in(const std::vector<OutlineNode>& nodes, const std::string& id) {
    for (const auto& node : nodes) {
        if (node.id == id) return &node;
        if (const auto* hit = find_in(node.children, id)) return hit;
    }
    return nullptr;
}

bool locate_in(const std::vector<OutlineNode>& nodes, const OutlineNode* parent, std::size_t depth,
               const std::string& id, NodeLocation& out) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].id == id) {
            out = NodeLocation{&nodes[i], parent, i, depth};
            return true;
        }
        if (locate_in(nodes[i].children, &nodes[i], depth + 1, id, out)) return true;
    }
    return false;
}

}  // namespace

const OutlineNode* find_node(const OutlineTree& tree, const std::string& id) {
    if (id.empty()) return nullptr;
    return find_in(tree.root_sections, id);
}

std::optional<NodeLocation> locate_node(const OutlineTree& tree, const std::string& id) {
    if (id.empty()) return std::nullopt;
    NodeLocation loc;
    if (locate_in(tree.root_sections, nullptr, 0, id, loc)) return loc;
    return std::nullopt;
}

namespace {

bool path_to(const std::vector<OutlineNode>& nodes, const std::string& id,
             std::vector<const OutlineNode*>& path) {
    for (const auto& node : nodes) {
        path.push_back(&node);
        if (node.id == id) return true;
        if (path_to(node.children, id, path)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::string section_path(const OutlineTree& tree, const std::string& id) {
    std::vector<const OutlineNode*> path;
    if (!path_to(tree.root_sections, id, path)) return {};
    std::string out;
    for (const auto* node : path) {
        if (node->kind == NodeKind::Paragraph) break;
        if (!out.empty()) out += " > ";
        out += node->heading;
    }
    return out;
}

namespace {

void walk(const OutlineNode& node, std::size_t depth,
          const std::function<void(const OutlineNode&, std::size_t)>& fn) {
    fn(node, depth);
    for (const auto& child : node.children) walk(child, depth + 1, fn);
}

}  // namespace

void for_each_node(const OutlineTree& tree,
                   const std::function<void(const OutlineNode&, std::size_t)>& fn) {
    for (const auto& section : tree.root_sections) walk(section, 0, fn);
}

std::size_t node_count(const OutlineTree& tree) {
    std::size_t n = 0;
    for_each_node(tree, [&](const OutlineNode&, std::size_t) { ++n; });
    return n;
}

std::vector<const OutlineNode*> paragraphs_of(const OutlineTree& tree) {
    std::vector<const OutlineNode*> out;
    for_each_node(tree, [&](const OutlineNode& node, std::size_t) {
        if (node.kind == NodeKind::Paragraph) out.push_back(&node);
    });
    return out;
}

std::string allocate_id(const OutlineTree& tree, const std::string& prefix) {
    std::uint64_t next = 1;
    for_each_node(tree, [&](const OutlineNode& node, std::size_t) {
        if (node.id.size() <= prefix.size() || node.id.compare(0, prefix.size(), prefix) != 0) return;
        const std::string suffix = node.id.substr(prefix.size());
        if (!std::all_of(suffix.begin(), suffix.end(),
                         [](unsigned char c) { return std::isdigit(c); }))
            return;
        const std::uint64_t k = std::strtoull(suffix.c_str(), nullptr, 10);
        if (k >= next) next = k + 1;
    });
    return prefix + std::to_string(next);
}

}  // namespace docevo
