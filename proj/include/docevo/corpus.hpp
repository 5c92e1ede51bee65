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
#ifndef DOCEVO_CORPUS_HPP
#define DOCEVO_CORPUS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "docevo/outline.hpp"

namespace docevo {

struct Reference {
    std::string key;  // normalized citation key, unique within a task
    std::string title;
    std::string venue;
    std::string year;
    std::string external_id;

    bool operator==(const Reference&) const = default;
};

// The writing input: topic, context documents, and the reference set
// available for citation.
struct WritingTask {
    std::string topic;
    std::vector<std::string> context_docs;
    std::vector<Reference> references;
};

// Full parse output. Paragraph-aligned raw citation counts keep duplicate
// anchors (the outline stores deduplicated keys); order matches
// paragraphs_of(tree).
struct ParsedDocument {
    OutlineTree tree;
    std::vector<Reference> bibliography;
    std::vector<std::size_t> paragraph_raw_citation_counts;
    std::vector<std::string> unresolved_keys;  // cited but missing from the bibliography
    std::vector<std::string> warnings;
};

// Recovers the section/subsection/paragraph schema from arXiv-style HTML.
// LaTeXML roles (ltx_* classes) are used when present; otherwise heading
// levels drive the mapping, with deeper levels flattened into subsections.
// Throws Errc::UnparsableDocument when no sectioning or content is found.
ParsedDocument parse_document_full(const std::string& html);

OutlineTree parse_document(const std::string& html);

// Citation anchors of a paragraph fragment: ordered, first-occurrence
// deduplicated keys. raw_count keeps duplicates for density statistics.
struct CitationScan {
    std::vector<std::string> keys;
    std::size_t raw_count = 0;
};

CitationScan scan_citations(const std::string& paragraph_html);
std::vector<std::string> extract_citations(const std::string& paragraph_html);

// Lowercase alphanumerics-plus-dashes; stable joins against bibliographies.
std::string normalize_citation_key(const std::string& raw);

// X = (T, C, R): topic from the tree title, context documents from the
// paragraph contents, references from the bibliography.
// Throws Errc::MissingTopic on an empty title.
WritingTask assemble_task(const OutlineTree& tree, const std::vector<Reference>& bibliography);

// Sidecar bibliography: one "key<TAB>title" per line; blank lines and
// '#' comments ignored.
std::vector<Reference> load_bibliography_tsv(const std::string& path);

nlohmann::json reference_to_json(const Reference& ref);
Reference reference_from_json(const nlohmann::json& j);
nlohmann::json task_to_json(const WritingTask& task);
WritingTask task_from_json(const nlohmann::json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace docevo

#endif  // DOCEVO_CORPUS_HPP
