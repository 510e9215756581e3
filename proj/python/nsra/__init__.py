# Copyright 2026 The nsra Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Natural-language static analysis queries compiled to CodeQL."""

from ._nsra import (
    NsraError,
    compare,
    compile,
    dump_profile,
    halstead_nsra,
    halstead_ql,
    normalize_ql,
    to_english,
    warnings,
)

__all__ = [
    "NsraError",
    "compare",
    "compile",
    "dump_profile",
    "halstead_nsra",
    "halstead_ql",
    "normalize_ql",
    "to_english",
    "warnings",
]
