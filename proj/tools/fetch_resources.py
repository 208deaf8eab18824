#!/usr/bin/env python3
# Copyright 2026 The Sylla Authors.
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

"""Populate the resource directory.

Fetches the CMU pronouncing dictionary (from the `cmudict` Python package)
and, when the pyphen hyphenation patterns are available, writes a
pattern-derived English syllabified word list in hyphenation-list format.

Files that cannot be redistributed or downloaded here (the Gutenberg
hyphenation list, CMU ARCTIC prompts, MFA dictionaries) are copied in when
given on the command line.
"""

import argparse
import glob
import os
import shutil
import subprocess
import sys
import tempfile
import zipfile

CMUDICT_PACKAGE = "cmudict==1.1.3"
SEPARATOR = "·"  # middle dot


def fetch_cmudict(dest):
    out = os.path.join(dest, "cmudict.dict")
    if os.path.exists(out):
        print(f"have {out}")
        return out
    try:
        import cmudict  # noqa: F401

        src = os.path.join(os.path.dirname(cmudict.__file__), "data", "cmudict.dict")
        shutil.copyfile(src, out)
    except ImportError:
        with tempfile.TemporaryDirectory() as tmp:
            subprocess.run(
                [sys.executable, "-m", "pip", "download", "--no-deps", "-q", "-d", tmp, CMUDICT_PACKAGE],
                check=True,
            )
            wheel = glob.glob(os.path.join(tmp, "cmudict-*.whl"))[0]
            with zipfile.ZipFile(wheel) as z, open(out, "wb") as f:
                f.write(z.read("cmudict/data/cmudict.dict"))
    print(f"wrote {out}")
    return out


def dictionary_words(path):
    words = set()
    with open(path, encoding="utf-8", errors="replace") as f:
        for line in f:
            if not line.strip() or line.startswith(";;;"):
                continue
            word = line.split()[0]
            if "(" in word:
                word = word[: word.index("(")]
            if word.isalpha() and word.isascii():
                words.add(word.lower())
    return sorted(words)


def write_pattern_corpus(dict_path, dest):
    out = os.path.join(dest, "en_hyphenation_patterns.txt")
    if os.path.exists(out):
        print(f"have {out}")
        return
    try:
        import pyphen
    except ImportError:
        print("pyphen not installed; skipping the pattern-derived corpus")
        return
    hyph = pyphen.Pyphen(lang="en_US", left=1, right=1)
    with open(out, "w", encoding="utf-8", newline="\n") as f:
        for word in dictionary_words(dict_path):
            f.write(hyph.inserted(word, SEPARATOR) + "\n")
    print(f"wrote {out}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dest", default=os.path.join(os.path.dirname(__file__), "..", "resources"))
    parser.add_argument("--arctic", help="CMU ARCTIC prompt file (cmuarctic.data)")
    parser.add_argument("--gutenberg", help="Gutenberg hyphenation list (mhyph.txt)")
    parser.add_argument("--mfa", nargs="*", default=[], help="MFA dictionary files")
    args = parser.parse_args()

    dest = os.path.abspath(args.dest)
    os.makedirs(dest, exist_ok=True)
    dict_path = fetch_cmudict(dest)
    write_pattern_corpus(dict_path, dest)
    if args.arctic:
        shutil.copyfile(args.arctic, os.path.join(dest, "cmuarctic.data"))
    if args.gutenberg:
        shutil.copyfile(args.gutenberg, os.path.join(dest, "mhyph.txt"))
    for path in args.mfa:
        shutil.copyfile(path, os.path.join(dest, os.path.basename(path)))


if __name__ == "__main__":
    main()
