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
#ifndef DOCEVO_ERRORS_HPP
#define DOCEVO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace docevo {

enum class Errc {
    MalformedAction,
    TargetNotFound,
    IllegalStructure,
    NotInvertible,
    InvalidTree,
    UnparsableDocument,
    MissingTopic,
    NothingToPerturb,
    EmptyCorpus,
    ExecutorError,
    InvalidSemanticEdit,
    ReplayMiss,
    InvalidBudget,
    EpisodeOver,
    RewardsAbsent,
    RolloutAborted,
    IoError,
    BadConfig,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace docevo

#endif  // DOCEVO_ERRORS_HPP
