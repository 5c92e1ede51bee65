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
#include "docevo/diff.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "docevo/errors.hpp"
#include "docevo/rng.hpp"

namespace docevo {

using nlohmann::json;

const char* action_kind_name(ActionKind kind) {
    switch (kind) {
        case ActionKind::InsertNode: return "insert_node";
        case ActionKind::DeleteNode: return "delete_node";
        case ActionKind::MoveNode: return "move_node";
        case ActionKind::ReorderChildren: return "reorder_children";
        case ActionKind::UpdateContent: return "update_content";
        case ActionKind::ExpandContent: return "expand_content";
        case ActionKind::RefineContent: return "refine_content";
    }
    return "unknown";
}

std::optional<ActionKind> action_kind_from_name(const std::string& name) {
    static const std::unordered_map<std::string, ActionKind> table = {
        {"insert_node", ActionKind::InsertNode},
        {"delete_node", ActionKind::DeleteNode},
        {"move_node", ActionKind::MoveNode},
        {"reorder_children", ActionKind::ReorderChildren},
        {"update_content", ActionKind::UpdateContent},
        {"expand_content", ActionKind::ExpandContent},
        {"refine_content", ActionKind::RefineContent},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

DiffAction insert_action(std::string parent, std::size_t index, OutlineNode node, std::string intent) {
    DiffAction a;
    a.kind = ActionKind::InsertNode;
    a.target = std::move(parent);
    a.index = index;
    a.node = std::move(node);
    a.intent = std::move(intent);
    return a;
}

DiffAction delete_action(std::string target, std::string intent) {
    DiffAction a;
    a.kind = ActionKind::DeleteNode;
    a.target = std::move(target);
    a.intent = std::move(intent);
    return a;
}

DiffAction move_action(std::string target, std::string dest_parent, std::size_t index,
                       std::string intent) {
    DiffAction a;
    a.kind = ActionKind::MoveNode;
    a.target = std::move(target);
    a.dest_parent = std::move(dest_parent);
    a.index = index;
    a.intent = std::move(intent);
    return a;
}

DiffAction reorder_action(std::string parent, std::vector<std::size_t> permutation,
                          std::string intent) {
    DiffAction a;
    a.kind = ActionKind::ReorderChildren;
    a.target = std::move(parent);
    a.permutation = std::move(permutation);
    a.intent = std::move(intent);
    return a;
}

DiffAction update_content_action(std::string target, std::string content,
                                 std::vector<std::string> citations, std::string intent) {
    DiffAction a;
    a.kind = ActionKind::UpdateContent;
    a.target = std::move(target);
    a.content = std::move(content);
    a.citations = std::move(citations);
    a.intent = std::move(intent);
    return a;
}

DiffAction update_heading_action(std::string target, std::string heading, std::string intent) {
    DiffAction a;
    a.kind = ActionKind::UpdateContent;
    a.target = std::move(target);
    a.heading = std::move(heading);
    a.intent = std::move(intent);
    return a;
}

DiffAction semantic_action(ActionKind kind, std::string target, std::string intent) {
    DiffAction a;
    a.kind = kind;
    a.target = std::move(target);
    a.intent = std::move(intent);
    return a;
}

ExecutionMode classify_mode(const DiffAction& action) {
    switch (action.kind) {
        case ActionKind::InsertNode:
            if (!action.node) throw Error(Errc::MalformedAction, "insert_node payload needs 'node'");
            if (!action.index) throw Error(Errc::MalformedAction, "insert_node payload needs 'index'");
            return ExecutionMode::Direct;
        case ActionKind::DeleteNode:
            if (action.target.empty())
                throw Error(Errc::MalformedAction, "delete_node needs a target id");
            return ExecutionMode::Direct;
        case ActionKind::MoveNode:
            if (action.target.empty())
                throw Error(Errc::MalformedAction, "move_node needs a target id");
            if (!action.dest_parent)
                throw Error(Errc::MalformedAction, "move_node payload needs 'parent'");
            if (!action.index) throw Error(Errc::MalformedAction, "move_node payload needs 'index'");
            return ExecutionMode::Direct;
        case ActionKind::ReorderChildren:
            if (!action.permutation)
                throw Error(Errc::MalformedAction, "reorder_children payload needs 'permutation'");
            return ExecutionMode::Direct;
        case ActionKind::UpdateContent:
            if (action.target.empty())
                throw Error(Errc::MalformedAction, "update_content needs a target id");
            return (action.content || action.citations || action.heading) ? ExecutionMode::Direct
                                                                          : ExecutionMode::Llm;
        case ActionKind::ExpandContent:
        case ActionKind::RefineContent:
            if (action.target.empty())
                throw Error(Errc::MalformedAction,
                            std::string(action_kind_name(action.kind)) + " needs a target id");
            return ExecutionMode::Llm;
    }
    throw Error(Errc::MalformedAction, "unknown action kind");
}

namespace {

struct MutLocation {
    OutlineNode* node = nullptr;
    std::vector<OutlineNode>* siblings = nullptr;
    std::size_t index = 0;
    std::size_t depth = 0;  // 0 = root section
};

bool locate_mut_in(std::vector<OutlineNode>& nodes, std::size_t depth, const std::string& id,
                   MutLocation& out) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].id == id) {
            out = MutLocation{&nodes[i], &nodes, i, depth};
            return true;
        }
        if (locate_mut_in(nodes[i].children, depth + 1, id, out)) return true;
    }
    return false;
}

std::optional<MutLocation> locate_mut(OutlineTree& tree, const std::string& id) {
    if (id.empty()) return std::nullopt;
    MutLocation loc;
    if (locate_mut_in(tree.root_sections, 0, id, loc)) return loc;
    return std::nullopt;
}

// Child list of `parent_id` ("" = root level) plus the depth its children
// occupy. Throws TargetNotFound / IllegalStructure.
std::pair<std::vector<OutlineNode>*, std::size_t> mut_children(OutlineTree& tree,
                                                               const std::string& parent_id) {
    if (parent_id.empty()) return {&tree.root_sections, 0};
    auto loc = locate_mut(tree, parent_id);
    if (!loc) throw Error(Errc::TargetNotFound, "no node with id '" + parent_id + "'");
    if (loc->node->kind == NodeKind::Paragraph)
        throw Error(Errc::IllegalStructure, "paragraph '" + parent_id + "' cannot hold children");
    return {&loc->node->children, loc->depth + 1};
}

// Assigns level kinds to an inserted subtree from its destination depth.
// Payload kinds only distinguish heading nodes from paragraphs; the level
// is a property of where the subtree lands.
OutlineNode rekind_for_depth(OutlineNode node, std::size_t depth) {
    if (node.kind == NodeKind::Paragraph) {
        if (depth == 0)
            throw Error(Errc::IllegalStructure, "paragraph '" + node.id + "' cannot be a root node");
        return node;
    }
    if (depth == 0) {
        node.kind = NodeKind::Section;
    } else if (depth == 1) {
        node.kind = NodeKind::Subsection;
    } else {
        throw Error(Errc::IllegalStructure,
                    "heading node '" + node.id + "' would nest deeper than subsection");
    }
    for (auto& child : node.children) child = rekind_for_depth(std::move(child), depth + 1);
    return node;
}

void collect_ids(const OutlineNode& node, std::vector<std::string>& out) {
    out.push_back(node.id);
    for (const auto& child : node.children) collect_ids(child, out);
}

void check_kind_at_depth(NodeKind kind, std::size_t depth, const std::string& id) {
    const bool ok = (kind == NodeKind::Section && depth == 0) ||
                    (kind == NodeKind::Subsection && depth == 1) ||
                    (kind == NodeKind::Paragraph && (depth == 1 || depth == 2));
    if (!ok)
        throw Error(Errc::IllegalStructure, std::string(node_kind_name(kind)) + " '" + id +
                                                "' cannot be placed at depth " + std::to_string(depth));
}

const OutlineNode* find_in_subtree(const OutlineNode& root, const std::string& id) {
    if (root.id == id) return &root;
    for (const auto& child : root.children) {
        if (const auto* hit = find_in_subtree(child, id)) return hit;
    }
    return nullptr;
}

void do_insert(OutlineTree& tree, const DiffAction& action) {
    auto [list, depth] = mut_children(tree, action.target);
    if (*action.index > list->size())
        throw Error(Errc::IllegalStructure, "insert index " + std::to_string(*action.index) +
                                                " out of range (size " +
                                                std::to_string(list->size()) + ")");
    OutlineNode node = rekind_for_depth(*action.node, depth);

    std::vector<std::string> ids;
    collect_ids(node, ids);
    std::unordered_set<std::string> unique;
    for (const auto& id : ids) {
        if (id.empty()) throw Error(Errc::IllegalStructure, "inserted node has an empty id");
        if (!unique.insert(id).second)
            throw Error(Errc::IllegalStructure, "inserted subtree repeats id '" + id + "'");
        if (find_node(tree, id))
            throw Error(Errc::IllegalStructure, "id '" + id + "' already exists in the tree");
    }
    list->insert(list->begin() + static_cast<std::ptrdiff_t>(*action.index), std::move(node));
}

void do_delete(OutlineTree& tree, const DiffAction& action) {
    auto loc = locate_mut(tree, action.target);
    if (!loc) throw Error(Errc::TargetNotFound, "no node with id '" + action.target + "'");
    loc->siblings->erase(loc->siblings->begin() + static_cast<std::ptrdiff_t>(loc->index));
}

void do_move(OutlineTree& tree, const DiffAction& action) {
    auto loc = locate_mut(tree, action.target);
    if (!loc) throw Error(Errc::TargetNotFound, "no node with id '" + action.target + "'");

    const std::string& dest = *action.dest_parent;
    if (!dest.empty()) {
        if (dest == action.target || find_in_subtree(*loc->node, dest))
            throw Error(Errc::IllegalStructure,
                        "moving '" + action.target + "' under '" + dest + "' creates a cycle");
    }

    OutlineNode moved = std::move(*loc->node);
    loc->siblings->erase(loc->siblings->begin() + static_cast<std::ptrdiff_t>(loc->index));

    // Resolve the destination after removal; the index is interpreted
    // against the destination's child list with the target already gone.
    auto [list, depth] = mut_children(tree, dest);
    check_kind_at_depth(moved.kind, depth, moved.id);
    if (*action.index > list->size())
        throw Error(Errc::IllegalStructure, "move index " + std::to_string(*action.index) +
                                                " out of range (size " +
                                                std::to_string(list->size()) + ")");
    list->insert(list->begin() + static_cast<std::ptrdiff_t>(*action.index), std::move(moved));
}

void do_reorder(OutlineTree& tree, const DiffAction& action) {
    auto [list, depth] = mut_children(tree, action.target);
    (void)depth;
    const auto& perm = *action.permutation;
    if (perm.size() != list->size())
        throw Error(Errc::IllegalStructure, "permutation size " + std::to_string(perm.size()) +
                                                " does not match child count " +
                                                std::to_string(list->size()));
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t p : perm) {
        if (p >= perm.size() || seen[p])
            throw Error(Errc::IllegalStructure, "payload is not a permutation of the children");
        seen[p] = true;
    }
    std::vector<OutlineNode> reordered;
    reordered.reserve(list->size());
    for (std::size_t p : perm) reordered.push_back(std::move((*list)[p]));
    *list = std::move(reordered);
}

void do_update(OutlineTree& tree, const DiffAction& action) {
    auto loc = locate_mut(tree, action.target);
    if (!loc) throw Error(Errc::TargetNotFound, "no node with id '" + action.target + "'");
    OutlineNode& node = *loc->node;
    if (node.kind == NodeKind::Paragraph) {
        if (action.heading)
            throw Error(Errc::IllegalStructure,
                        "paragraph '" + node.id + "' has no heading to update");
        if (action.content) node.content = *action.content;
        if (action.citations) node.citations = *action.citations;
    } else {
        if (action.content || action.citations)
            throw Error(Errc::IllegalStructure,
                        "'" + node.id + "' is a heading node; only its heading can be updated");
        if (action.heading) node.heading = *action.heading;
    }
}

}  // namespace

OutlineTree exec_direct(const OutlineTree& state, const DiffAction& action) {
    if (classify_mode(action) != ExecutionMode::Direct)
        throw Error(Errc::MalformedAction,
                    std::string(action_kind_name(action.kind)) +
                        " requires generation; route it through apply_transition");

    OutlineTree next = state;
    switch (action.kind) {
        case ActionKind::InsertNode: do_insert(next, action); break;
        case ActionKind::DeleteNode: do_delete(next, action); break;
        case ActionKind::MoveNode: do_move(next, action); break;
        case ActionKind::ReorderChildren: do_reorder(next, action); break;
        case ActionKind::UpdateContent: do_update(next, action); break;
        default: throw Error(Errc::MalformedAction, "not a direct action");
    }

    auto report = validate_tree(next, ValidationProfile::State);
    if (!report.valid)
        throw Error(Errc::IllegalStructure,
                    "edit breaks invariant '" + report.violations.front().rule +
                        "': " + report.violations.front().message);
    return next;
}

DiffAction invert_action(const OutlineTree& state, const DiffAction& action) {
    if (classify_mode(action) != ExecutionMode::Direct)
        throw Error(Errc::NotInvertible, "semantic edits have no deterministic inverse");

    switch (action.kind) {
        case ActionKind::InsertNode:
            return delete_action(action.node->id, "revert insertion");
        case ActionKind::DeleteNode: {
            auto loc = locate_node(state, action.target);
            if (!loc) throw Error(Errc::TargetNotFound, "no node with id '" + action.target + "'");
            const std::string parent_id = loc->parent ? loc->parent->id : std::string();
            return insert_action(parent_id, loc->index, *loc->node, "restore deleted node");
        }
        case ActionKind::MoveNode: {
            auto loc = locate_node(state, action.target);
            if (!loc) throw Error(Errc::TargetNotFound, "no node with id '" + action.target + "'");
            const std::string parent_id = loc->parent ? loc->parent->id : std::string();
            return move_action(action.target, parent_id, loc->index, "revert move");
        }
        case ActionKind::ReorderChildren: {
            const auto& perm = *action.permutation;
            std::vector<std::size_t> inverse(perm.size());
            for (std::size_t i = 0; i < perm.size(); ++i) {
                if (perm[i] >= perm.size())
                    throw Error(Errc::IllegalStructure, "payload is not a permutation");
                inverse[perm[i]] = i;
            }
            return reorder_action(action.target, std::move(inverse), "revert reorder");
        }
        case ActionKind::UpdateContent: {
            auto loc = locate_node(state, action.target);
            if (!loc) throw Error(Errc::TargetNotFound, "no node with id '" + action.target + "'");
            DiffAction inverse;
            inverse.kind = ActionKind::UpdateContent;
            inverse.target = action.target;
            inverse.intent = "revert content update";
            if (action.content) inverse.content = loc->node->content;
            if (action.citations) inverse.citations = loc->node->citations;
            if (action.heading) inverse.heading = loc->node->heading;
            return inverse;
        }
        default:
            throw Error(Errc::NotInvertible, "action kind has no inverse");
    }
}

OutlineTree replay_script(const OutlineTree& start, const std::vector<DiffAction>& script) {
    OutlineTree state = start;
    for (const auto& action : script) state = exec_direct(state, action);
    return state;
}

namespace {

struct TreeIndex {
    std::unordered_map<std::string, const OutlineNode*> nodes;
    std::unordered_map<std::string, std::string> parent_of;  // "" = root level
    std::vector<std::string> preorder;
};

void index_nodes(const std::vector<OutlineNode>& nodes, const std::string& parent, TreeIndex& out) {
    for (const auto& node : nodes) {
        out.nodes.emplace(node.id, &node);
        out.parent_of.emplace(node.id, parent);
        out.preorder.push_back(node.id);
        index_nodes(node.children, node.id, out);
    }
}

TreeIndex index_tree(const OutlineTree& tree) {
    TreeIndex idx;
    index_nodes(tree.root_sections, "", idx);
    return idx;
}

const std::vector<OutlineNode>* children_of(const OutlineTree& tree, const std::string& parent_id) {
    if (parent_id.empty()) return &tree.root_sections;
    const auto* node = find_node(tree, parent_id);
    return node ? &node->children : nullptr;
}

std::vector<std::string> child_ids(const OutlineTree& tree, const std::string& parent_id) {
    std::vector<std::string> ids;
    if (const auto* list = children_of(tree, parent_id)) {
        ids.reserve(list->size());
        for (const auto& node : *list) ids.push_back(node.id);
    }
    return ids;
}

}  // namespace

std::vector<DiffAction> diff_trees(const OutlineTree& before, const OutlineTree& after) {
    for (const auto* tree : {&before, &after}) {
        auto report = validate_tree(*tree, ValidationProfile::State);
        if (!report.valid)
            throw Error(Errc::InvalidTree, "diff input violates structural invariants");
    }
    if (before.title != after.title || before.meta != after.meta)
        throw Error(Errc::IllegalStructure,
                    "trees describe different documents; actions cannot change title or meta");

    const TreeIndex idx_b = index_tree(before);
    const TreeIndex idx_a = index_tree(after);
    for (const auto& [id, node_a] : idx_a.nodes) {
        auto it = idx_b.nodes.find(id);
        if (it != idx_b.nodes.end() && it->second->kind != node_a->kind)
            throw Error(Errc::IllegalStructure, "id '" + id + "' is reused across node kinds");
    }

    OutlineTree working = before;
    std::vector<DiffAction> script;
    auto emit = [&](DiffAction action) {
        working = exec_direct(working, action);
        script.push_back(std::move(action));
    };

    // Content sync on id-matched nodes.
    for (const auto& id : idx_a.preorder) {
        auto it = idx_b.nodes.find(id);
        if (it == idx_b.nodes.end()) continue;
        const OutlineNode* b = it->second;
        const OutlineNode* a = idx_a.nodes.at(id);
        if (a->kind == NodeKind::Paragraph) {
            if (b->content != a->content || b->citations != a->citations)
                emit(update_content_action(id, a->content, a->citations, "sync content"));
        } else if (b->heading != a->heading) {
            emit(update_heading_action(id, a->heading, "sync heading"));
        }
    }

    // Membership: walk `after` preorder so parents are placed before their
    // children; new nodes are inserted bare, surviving nodes moved. Both
    // append at the end of the destination; ordering is fixed afterwards.
    for (const auto& id : idx_a.preorder) {
        const std::string& parent_after = idx_a.parent_of.at(id);
        if (!idx_b.nodes.count(id)) {
            OutlineNode bare = *idx_a.nodes.at(id);
            bare.children.clear();
            emit(insert_action(parent_after, child_ids(working, parent_after).size(), std::move(bare),
                               "add node"));
        } else {
            auto loc = locate_node(working, id);
            const std::string current_parent = loc->parent ? loc->parent->id : std::string();
            if (current_parent != parent_after)
                emit(move_action(id, parent_after, child_ids(working, parent_after).size(),
                                 "relocate node"));
        }
    }

    // Deletes: maximal subtrees with no id surviving into `after`.
    {
        const TreeIndex idx_w = index_tree(working);
        for (const auto& id : idx_w.preorder) {
            if (idx_a.nodes.count(id)) continue;
            const std::string& parent = idx_w.parent_of.at(id);
            if (parent.empty() || idx_a.nodes.count(parent))
                emit(delete_action(id, "remove node"));
        }
    }

    // Ordering: one permutation per disordered parent.
    std::vector<std::string> parents;
    parents.emplace_back("");
    for (const auto& id : idx_a.preorder) {
        if (idx_a.nodes.at(id)->kind != NodeKind::Paragraph) parents.push_back(id);
    }
    for (const auto& parent : parents) {
        const auto desired = child_ids(after, parent);
        const auto current = child_ids(working, parent);
        if (desired == current) continue;
        std::vector<std::size_t> perm(desired.size());
        for (std::size_t i = 0; i < desired.size(); ++i) {
            auto it = std::find(current.begin(), current.end(), desired[i]);
            perm[i] = static_cast<std::size_t>(it - current.begin());
        }
        emit(reorder_action(parent, std::move(perm), "restore order"));
    }

    if (tree_digest(working) != tree_digest(after))
        throw Error(Errc::IllegalStructure, "diff reconstruction failed to converge");
    return script;
}

PolicyQuery build_query(const OutlineTree& state, const DiffAction& action) {
    if (classify_mode(action) == ExecutionMode::Direct)
        throw Error(Errc::MalformedAction, "direct actions are applied without a model query");
    auto loc = locate_node(state, action.target);
    if (!loc) throw Error(Errc::TargetNotFound, "no node with id '" + action.target + "'");

    PolicyQuery q;
    q.state_digest = tree_digest(state);
    q.target_id = action.target;
    q.action_kind = action_kind_name(action.kind);
    q.intent = action.intent;
    q.text = "outline edit request\n";
    q.text += "state-digest: " + q.state_digest + "\n";
    q.text += "action: " + q.action_kind + "\n";
    q.text += "target: " + q.target_id + "\n";
    q.text += "path: " + section_path(state, action.target) + "\n";
    q.text += "intent: " + action.intent + "\n";
    q.text += "region:\n```json\n" + node_to_json(*loc->node).dump() + "\n```\n";
    q.text +=
        "Rewrite the region to satisfy the intent. Reply with the replacement node as JSON "
        "with the same id, inside a fenced code block.";
    return q;
}

OutlineTree apply_transition(const OutlineTree& state, const DiffAction& action,
                             SemanticExecutor& executor) {
    if (classify_mode(action) == ExecutionMode::Direct) return exec_direct(state, action);

    auto loc = locate_node(state, action.target);
    if (!loc) throw Error(Errc::TargetNotFound, "no node with id '" + action.target + "'");
    const PolicyQuery query = build_query(state, action);

    OutlineTree candidate;
    try {
        candidate = executor.execute(state, query);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(Errc::ExecutorError,
                    std::string("executor failed: ") + e.what() + " [query " + query.hash() + "]");
    }

    if (!validate_tree(candidate, ValidationProfile::State).valid)
        throw Error(Errc::InvalidSemanticEdit, "executor returned a structurally invalid tree");

    // Confine the edit: outside the target subtree the state must be intact.
    OutlineTree patched = candidate;
    auto patched_loc = locate_mut(patched, action.target);
    if (!patched_loc)
        throw Error(Errc::InvalidSemanticEdit, "target '" + action.target + "' vanished from the edit");
    *patched_loc->node = *loc->node;
    if (tree_digest(patched) != tree_digest(state))
        throw Error(Errc::InvalidSemanticEdit, "edit escaped the target subtree");

    return candidate;
}

nlohmann::json action_to_json(const DiffAction& action) {
    json payload = json::object();
    if (action.index) payload["index"] = *action.index;
    if (action.node) payload["node"] = node_to_json(*action.node);
    if (action.dest_parent) payload["parent"] = *action.dest_parent;
    if (action.permutation) payload["permutation"] = *action.permutation;
    if (action.content) payload["content"] = *action.content;
    if (action.citations) payload["citations"] = *action.citations;
    if (action.heading) payload["heading"] = *action.heading;

    json j;
    j["kind"] = action_kind_name(action.kind);
    j["target"] = action.target;
    j["payload"] = std::move(payload);
    j["intent"] = action.intent;
    return j;
}

DiffAction action_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw Error(Errc::MalformedAction, "action needs a string 'kind'");
    auto kind = action_kind_from_name(j.at("kind").get<std::string>());
    if (!kind)
        throw Error(Errc::MalformedAction,
                    "unknown action kind '" + j.at("kind").get<std::string>() + "'");

    DiffAction action;
    action.kind = *kind;
    action.target = j.value("target", std::string());
    action.intent = j.value("intent", std::string());
    if (j.contains("payload") && j.at("payload").is_object()) {
        const auto& p = j.at("payload");
        try {
            if (p.contains("index")) action.index = p.at("index").get<std::size_t>();
            if (p.contains("node")) action.node = node_from_json(p.at("node"), 0);
            if (p.contains("parent")) action.dest_parent = p.at("parent").get<std::string>();
            if (p.contains("permutation"))
                action.permutation = p.at("permutation").get<std::vector<std::size_t>>();
            if (p.contains("content")) action.content = p.at("content").get<std::string>();
            if (p.contains("citations"))
                action.citations = p.at("citations").get<std::vector<std::string>>();
            if (p.contains("heading")) action.heading = p.at("heading").get<std::string>();
        } catch (const Error&) {
            throw;
        } catch (const std::exception& e) {
            throw Error(Errc::MalformedAction, std::string("bad payload: ") + e.what());
        }
    }
    return action;
}

}  // namespace docevo
