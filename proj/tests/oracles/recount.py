#!/usr/bin/env python3
"""Brute-force recount of the replication statistics for a fixture backend.

Reads the corpus TSV, its CoNLL-U parses and a fixture JSON, and derives the
per-sentence outcome from the fixture table alone. A sentence is a hit when
every gold position is answered by the gold pronoun and nothing else, and a
miss when some gold position never offers the gold pronoun. Anything else is
undecidable without running the ranker, so the script refuses it.

usage: recount.py corpus.tsv parses.conllu fixture.json neopronouns.tsv [top_k]
"""

import json
import sys

MASK = "<MASK>"


def read_tsv(path):
    rows = []
    with open(path, encoding="utf-8") as f:
        for raw in f:
            line = raw.rstrip("\n").rstrip("\r")
            if not line.strip() or line.startswith("#"):
                continue
            text, gold = line.split("\t")
            rows.append((text, [g.strip().lower() for g in gold.split(",") if g.strip()]))
    return rows


def read_conllu(path):
    sentences, tokens, text = [], [], None
    with open(path, encoding="utf-8") as f:
        for raw in f:
            line = raw.rstrip("\n")
            if not line.strip():
                if tokens:
                    sentences.append((text, tokens))
                tokens, text = [], None
                continue
            if line.startswith("#"):
                if line.startswith("# text = "):
                    text = line[len("# text = "):]
                continue
            cols = line.split("\t")
            if "-" in cols[0] or "." in cols[0]:
                continue
            tokens.append({"form": cols[1], "upos": cols[3], "misc": cols[9]})
    if tokens:
        sentences.append((text, tokens))
    return sentences


def spans(tokens):
    """Character span of each token in the detokenized text."""
    out, pos = [], 0
    for t in tokens:
        out.append((pos, pos + len(t["form"])))
        pos += len(t["form"])
        if "SpaceAfter=No" not in t["misc"].split("|"):
            pos += 1
    return out


def main(argv):
    tsv, conllu, fixture_path, neo_path = argv[1:5]
    top_k = int(argv[5]) if len(argv) > 5 else 2
    rows = read_tsv(tsv)
    parses = read_conllu(conllu)
    assert len(rows) == len(parses), "row count differs from parse count"
    with open(fixture_path, encoding="utf-8") as f:
        fixture = json.load(f)
    supported = set(fixture["supported"])
    table = {e["text"]: [p["token"] for p in e["predictions"]] for e in fixture["entries"]}
    with open(neo_path, encoding="utf-8") as f:
        neo = {line.split("\t")[0].lower() for line in f if line.strip() and not line.startswith("#")}

    rejected = parsed = hits = words = pronouns = 0
    for (text, gold), (ptext, tokens) in zip(rows, parses):
        assert text == ptext, f"text mismatch: {text!r}"
        if any(g not in supported and g not in neo for g in gold):
            rejected += 1
            continue
        parsed += 1
        words += sum(1 for t in tokens if t["upos"] != "PUNCT")
        pronouns += len(gold)

        # Gold pronouns in order, matched to PRON tokens (or neopronouns) of
        # the same surface.
        places, start = [], 0
        for g in gold:
            i = next(i for i in range(start, len(tokens))
                     if tokens[i]["form"].lower() == g and (tokens[i]["upos"] == "PRON" or g in neo))
            places.append(i)
            start = i + 1

        offsets = spans(tokens)
        verdicts = []
        for g, i in zip(gold, places):
            b, e = offsets[i]
            masked = text[:b] + MASK + text[e:]
            offered = [p for p in table.get(masked, []) if p in supported][:top_k]
            if g not in offered:
                verdicts.append(False)
            elif offered == [g]:
                verdicts.append(True)
            else:
                raise SystemExit(f"undecidable without ranking: {masked!r} offers {offered}")
        hits += all(verdicts)

    result = {"total": len(rows), "rejected": rejected, "parsed": parsed, "hits": hits}
    if parsed:
        result.update(accuracy=hits / parsed, avg_sentence_length=words / parsed, avg_pronouns=pronouns / parsed)
    print(json.dumps(result))


if __name__ == "__main__":
    main(sys.argv)
