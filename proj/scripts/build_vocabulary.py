#!/usr/bin/env python3
# Copyright 2026 The Normpipe Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/vocabulary.txt.

Lemmas come from the public-domain Webster's 2nd and GCIDE headword lists
(`english-words` package), filtered to words that are in common use
(`wordfreq` top 120k). Regular inflections of those lemmas are added when
they are themselves in common use. SMS forms are removed explicitly.

    pip install english-words wordfreq
    python scripts/build_vocabulary.py > data/vocabulary.txt
"""

import sys

import wordfreq
from english_words import get_english_words_set

TOP_N = 120000

# Frequent SMS spellings that the headword lists happen to contain.
SMS_FORMS = {
    "ur", "ya", "yo", "da", "dat", "dis", "wat", "wen", "gud", "luv", "nite",
    "thru", "tho", "cuz", "coz", "lol", "pls", "plz", "thx", "msg", "txt",
    "gonna", "wanna", "gotta", "kinda", "dunno", "lil", "em", "bout", "hav",
    "wud", "shud", "cud", "frnd", "ppl", "bday", "tmrw", "im", "ive", "dont",
    "didnt", "doesnt", "isnt", "wasnt", "couldnt", "wouldnt", "shouldnt",
    "thats", "whats", "youre", "theyre", "hes", "ok", "okie", "bro", "sis",
}


def inflections(lemma):
    out = {lemma + "s", lemma + "es", lemma + "ed", lemma + "d",
           lemma + "ing", lemma + "er", lemma + "est", lemma + "ly"}
    if lemma.endswith("e"):
        out.add(lemma[:-1] + "ing")
    if lemma.endswith("y") and len(lemma) > 2:
        out |= {lemma[:-1] + "ies", lemma[:-1] + "ied", lemma[:-1] + "ier",
                lemma[:-1] + "iest", lemma[:-1] + "ily"}
    if len(lemma) >= 3 and lemma[-1] not in "aeiouwxy" and \
            lemma[-2] in "aeiou" and lemma[-3] not in "aeiou":
        d = lemma + lemma[-1]
        out |= {d + "ed", d + "ing", d + "er", d + "est"}
    return out


def main():
    top = {w for w in wordfreq.top_n_list("en", TOP_N)
           if w.isascii() and w.isalpha()}
    heads = get_english_words_set(["web2", "gcide"], lower=True, alpha=True)
    lemmas = {w for w in heads & top if len(w) > 1 or w in ("a", "i")}
    vocab = set(lemmas)
    for lemma in lemmas:
        vocab |= inflections(lemma) & top
    vocab -= SMS_FORMS
    vocab = {w for w in vocab if len(w) > 1 or w in ("a", "i")}
    sys.stdout.write("# English vocabulary, one lowercase word per line.\n")
    sys.stdout.write("# Generated by scripts/build_vocabulary.py.\n")
    for w in sorted(vocab):
        sys.stdout.write(w + "\n")


if __name__ == "__main__":
    main()
