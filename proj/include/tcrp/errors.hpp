/*
   Copyright 2026 The tcrp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace tcrp {

/// A configured resource cap was hit. The quantity being computed is left
/// undetermined; no partial answer is reported as if it were exact.
class Undetermined : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A proven identity or a stated invariant failed to hold. Always a bug.
class Defect : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace tcrp
