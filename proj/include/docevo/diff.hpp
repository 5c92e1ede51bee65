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
#ifndef DOCEVO_DIFF_HPP
#define DOCEVO_DIFF_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "docevo/executor.hpp"
#include "docevo/outline.hpp"

namespace docevo {

// Closed action vocabulary. The first four are structural edits applied
// deterministically; the content kinds may require generation.
enum class ActionKind {
    InsertNode,
    DeleteNode,
    MoveNode,
    ReorderChildren,
    UpdateContent,
    ExpandContent,
    RefineContent,
};

// Wire spellings ("insert_node", ...); part of the trajectory file contract.
const char* action_kind_name(ActionKind kind);
std::optional<ActionKind> action_kind_from_name(const std::string& name);

enum class ExecutionMode { Direct, Llm };

// One editing action. `target` is the edited node's id; for InsertNode and
// ReorderChildren it names the parent ("" = root level). Payload fields are
// kind-specific; see the factory helpers below for the exact shapes.
struct DiffAction {
    ActionKind kind = ActionKind::DeleteNode;
    std::string target;

    std::optional<OutlineNode> node;                       // InsertNode: subtree to insert
    std::optional<std::size_t> index;                      // InsertNode/MoveNode: destination index
    std::optional<std::string> dest_parent;                // MoveNode: destination parent ("" = root)
    std::optional<std::vector<std::size_t>> permutation;   // ReorderChildren
    std::optional<std::string> content;                    // UpdateContent: replacement text
    std::optional<std::vector<std::string>> citations;     // UpdateContent: replacement keys
    std::optional<std::string> heading;                    // UpdateContent: replacement heading

    std::string intent;  // free text; feeds model queries for llm-mode actions

    bool operator==(const DiffAction&) const = default;
};

DiffAction insert_action(std::string parent, std::size_t index, OutlineNode node,
                         std::string intent = {});
DiffAction delete_action(std::string target, std::string intent = {});
DiffAction move_action(std::string target, std::string dest_parent, std::size_t index,
                       std::string intent = {});
DiffAction reorder_action(std::string parent, std::vector<std::size_t> permutation,
                          std::string intent = {});
DiffAction update_content_action(std::string target, std::string content,
                                 std::vector<std::string> citations, std::string intent = {});
DiffAction update_heading_action(std::string target, std::string heading, std::string intent = {});
// UpdateContent without replacement text, or Expand/Refine: generation required.
DiffAction semantic_action(ActionKind kind, std::string target, std::string intent);

// The execution-mode classifier: structural kinds are Direct; UpdateContent
// is Direct exactly when a replacement field is supplied; ExpandContent and
// RefineContent always require generation. Throws Errc::MalformedAction
// naming the missing payload field.
ExecutionMode classify_mode(const DiffAction& action);

// Deterministic structural editor. Returns a new tree; the input is never
// mutated. Errors: Errc::TargetNotFound, Errc::IllegalStructure (kind/parent
// violation, bad index or permutation, id collision, cycle on move).
OutlineTree exec_direct(const OutlineTree& state, const DiffAction& action);

// Inverse of a Direct action with respect to `state`:
//   exec_direct(exec_direct(state, a), invert_action(state, a)) == state.
// Llm-mode actions have no deterministic inverse -> Errc::NotInvertible.
DiffAction invert_action(const OutlineTree& state, const DiffAction& action);

// Direct-mode edit script from `before` to `after`; replaying it on `before`
// reproduces `after` digest-exactly. Nodes are matched by id (ids are stable
// where nodes persist); unmatched nodes become delete/insert pairs.
std::vector<DiffAction> diff_trees(const OutlineTree& before, const OutlineTree& after);

// Replays a whole script with exec_direct.
OutlineTree replay_script(const OutlineTree& start, const std::vector<DiffAction>& script);

// Renders the model query for an llm-mode action (q = f(a)); deterministic
// in (state digest, action).
PolicyQuery build_query(const OutlineTree& state, const DiffAction& action);

// Unified transition operator: Direct actions run through exec_direct;
// llm-mode actions are delegated to the executor and the result is
// re-validated structurally and confined to the target subtree.
// Errors: Errc::ExecutorError (transport), Errc::InvalidSemanticEdit.
OutlineTree apply_transition(const OutlineTree& state, const DiffAction& action,
                             SemanticExecutor& executor);

// Wire format {kind, target, payload, intent}.
nlohmann::json action_to_json(const DiffAction& action);
DiffAction action_from_json(const nlohmann::json& j);

}  // namespace docevo

#endif  // DOCEVO_DIFF_HPP
