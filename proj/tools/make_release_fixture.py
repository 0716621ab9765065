#!/usr/bin/env python3
# Copyright 2026 The TYPIC Toolkit Authors.
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
"""Builds data/release_fixture, a synthetic stand-in for the TYPIC release.

The public corpus ships Japanese text we cannot redistribute here, so this
script synthesizes English records whose aggregate counts match the published
corpus statistics and annotation-study results:

  * 1,000 counterarguments (2 motions x 500; 250 expert, 750 crowd), 7,100
    sentences and 124,000 word tokens in total;
  * 1,082 diagnostic comments on 197 counterarguments, split 271 dev / 811
    eval;
  * 1,154 main templated diagnoses (821 in eval, 64 of them NotApplicable);
  * 74 double-annotated eval comments whose template agreement has Cohen's
    kappa 0.517 and whose 73 agreed slots adjudicate to 65 matches;
  * 5 informativeness votes for each of the 1,090 templated diagnoses with
    857 score-3 majorities and ordinal Krippendorff alpha 0.265;
  * a 166-filler extractability sample (126 / 14 / 26);
  * 762 (counterargument, target) groups with 542/144/52/19/5 groups
    carrying 1/2/3/4/5 distinct templates.

Output is deterministic for a given --seed. Records are written with sorted
keys and compact separators, matching the toolkit's canonical writer.
"""

import argparse
import itertools
import json
import os
import random
import re
from collections import Counter, defaultdict

TOPICS = [
    {
        "id": "HW",
        "motion": "Homework should be abolished",
        "points": [
            ("HW1", "Abolishing homework gives students more free time"),
            ("HW2", "Forcing students to do homework makes them passive in character"),
            ("HW3", "It is not good for students to be obliged to study by their teachers or parents"),
            ("HW4", "Students have memorized the incorrect way to study with homework"),
            ("HW5", "Schools should take responsibility for the academic skills of children, not parents at home"),
        ],
    },
    {
        "id": "DP",
        "motion": "Death penalty should be abolished",
        "points": [
            ("DP1", "Death penalty is an inhumane punishment"),
            ("DP2", "Abolishing death penalty will prevent the ending the life of innocent people"),
            ("DP3", "Because of the high stress on the executioner, death penalty should be abolished"),
            ("DP4", "Death penalty deprives criminals of the opportunity for rehabilitation"),
            ("DP5", "The society is brutalized by the use of death penalty"),
        ],
    },
]

NOUN_PHRASES = {
    "HW": [
        "homework", "students", "teachers", "parents", "schools",
        "daily assignments", "free time", "club activities", "cram school",
        "basic skills", "independent study", "academic skills",
        "study habits", "the learning process", "children", "classes",
        "exams", "good grades", "curiosity", "responsibility",
        "abolishing homework", "weekend homework", "reading practice",
        "the curriculum", "young learners", "summer assignments",
    ],
    "DP": [
        "the death penalty", "criminals", "innocent people",
        "the executioner", "society", "prison", "life imprisonment",
        "victims", "families of victims", "the justice system",
        "rehabilitation", "crime", "deterrence", "public safety", "courts",
        "the government", "human rights", "punishment", "brutality",
        "the public", "abolishing the death penalty", "wrongful convictions",
        "serious offenders", "the legal system", "prison guards",
        "violent crime",
    ],
}

VERB_PHRASES = [
    "helps", "prevents", "makes", "improves", "harms", "supports",
    "reduces", "increases", "protects", "encourages", "requires", "creates",
    "destroys", "teaches", "changes", "depends on", "leads to",
    "is good for", "is bad for", "can replace",
]

OPENERS = [
    "In addition", "However", "For example", "That is to say", "Moreover",
    "This is because", "As a result", "Of course", "In fact", "First",
    "Second", "Finally",
]

ADVERBIALS = [
    "in many situations", "every day", "in the long run", "for most people",
    "at the same time", "in our society", "without any doubt", "very often",
    "clearly", "really", "in practice", "over time", "for a long time",
    "in the real world", "certainly", "usually", "generally", "today",
    "indeed", "in general",
]

# Phrases that never occur in generated arguments; used for fillers that
# cannot be extracted.
NOVEL_PHRASES = [
    "online tutoring programs", "peer review sessions",
    "restorative mediation programs", "community service orders",
    "flexible timetables", "victim support funds",
    "mentoring by older pupils", "electronic monitoring",
    "parental workshops", "appeal review boards", "library volunteering",
    "sentencing guidelines reform", "museum field trips",
    "apology ceremonies", "music lessons after lunch",
    "international treaties",
]

COMMENT_PATTERNS = {
    "CA1": "No reason is given for why {x} leads to {y}.",
    "CA2": "No reasons or examples for the claim that {x} brings about {y}.",
    "CA3": "It is not explained how {x} would block {y}.",
    "CA4": "No evidence is shown that {x} is enough to stop {y}.",
    "VAL1": "Hard to understand the advantages of {x} for {y}.",
    "VAL2": "It is not clear what is harmful about {x} for {y}.",
    "VAL3": "No discussion of why {x} should be {y}.",
    "VAL4": "No discussion of why {x} must not be {y}.",
    "CLS1": "No reason given for why {x} is {y}.",
    "CLS2": "The speech treats {x} and {y} as alike regarding {z} without saying why.",
    "PR1": "Doubts remain over whether {x} is actually possible.",
    "EX1": "Abstract use of phrases like {x}.",
    "EX2": "No explanation of how much {x} {y}.",
    "EX3": "The example of {x} is a personal story and is not generalized.",
    "CMP1": "No reasoning for why {x} matters more than {y}.",
    "CMP2": "Why is {x} better than {z} for achieving {y}?",
    "LR1": "Illogical leap from {x} to {y}.",
    "CLR1": "The meaning of {x} is unclear.",
    "CLR2": "Only a specific example about {x} is given, with no general account.",
    "GR1": "The point {x} does not seem relevant to the topic.",
    "GR2": "Unclear how {y} answers the government point {x}.",
    "GR3": "The point {x} ignores the government definition {y}.",
    "GS1": "Insufficient explanation of why {x} outweighs {y}.",
    "GS2": "Some people might answer that {x}.",
}

NOT_APPLICABLE_COMMENTS = [
    "The speech should be delivered with more confidence.",
    "A closing summary would make the speech easier to remember.",
    "The structure of the speech is hard to follow in places.",
    "The speaker should signpost the points before explaining them.",
    "The speech spends too long on the introduction.",
    "The tone is a little aggressive towards the other side.",
]

# Relative template frequencies for synthetic selections.
LABEL_WEIGHTS = {
    "CA1": 6, "CA2": 7, "CA3": 2, "CA4": 3, "VAL1": 5, "VAL2": 3,
    "VAL3": 3, "VAL4": 4, "CLS1": 14, "CLS2": 3, "PR1": 3, "EX1": 6,
    "EX2": 3, "EX3": 3, "CMP1": 3, "CMP2": 4, "LR1": 5, "CLR1": 3,
    "CLR2": 2, "GR1": 4, "GR2": 4, "GR3": 2, "GS1": 3, "GS2": 4,
}

WORD_RE = re.compile(r"[A-Za-z0-9]+")


def ntok(text):
    return len(WORD_RE.findall(text))


def dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def write_jsonl(path, records):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for record in records:
            f.write(dumps(record) + "\n")


def write_pretty(path, obj):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n")


def load_templates(path):
    with open(path, encoding="utf-8") as f:
        doc = json.load(f)
    return doc["version"], {t["id"]: t for t in doc["templates"]}, [t["id"] for t in doc["templates"]]


# --- counterarguments --------------------------------------------------------

def make_sentence(rng, topic, length):
    nps = NOUN_PHRASES[topic]

    def clause():
        return " ".join([rng.choice(nps), rng.choice(VERB_PHRASES), rng.choice(nps)])

    while True:
        opener = rng.choice(OPENERS) if rng.random() < 0.4 else None
        text = clause()
        used = ntok(text) + (ntok(opener) if opener else 0)
        if used <= length:
            break
    while length - used >= 6:
        link = rng.choice(["because", "and", "so"])
        extra = clause()
        if used + 1 + ntok(extra) > length:
            break
        text += (" " if link == "because" else ", ") + link + " " + extra
        used += 1 + ntok(extra)
    remaining = length - used
    pads = []
    while remaining > 0:
        options = [a for a in ADVERBIALS if ntok(a) <= remaining and a not in pads]
        pad = rng.choice(options)
        pads.append(pad)
        remaining -= ntok(pad)
    if pads:
        text += " " + " ".join(pads)
    if opener:
        text = opener + ", " + text
    text = text[0].upper() + text[1:] + "."
    assert ntok(text) == length, (text, length)
    return text


def adjust_to_total(rng, values, total, lo, hi):
    """Nudges values by +-1 until they sum to total, keeping lo[i] <= v <= hi."""
    values = list(values)
    if isinstance(lo, int):
        lo = [lo] * len(values)
    diff = total - sum(values)
    while diff != 0:
        i = rng.randrange(len(values))
        step = 1 if diff > 0 else -1
        if lo[i] <= values[i] + step <= hi:
            values[i] += step
            diff -= step
    return values


def split_length(rng, total, parts, minimum):
    cuts = [minimum] * parts
    for _ in range(total - minimum * parts):
        cuts[rng.randrange(parts)] += 1
    return cuts


def make_counterarguments(rng):
    ids = []
    for topic in ("HW", "DP"):
        for i in range(500):
            ids.append((topic, "%s-%04d" % (topic, i + 1)))
    sentence_counts = adjust_to_total(
        rng, [rng.choice([5, 6, 6, 7, 7, 7, 8, 8, 9, 10]) for _ in ids], 7100, 4, 11)
    token_counts = adjust_to_total(
        rng, [max(5 * n, min(200, round(rng.gauss(124, 22)))) for n in sentence_counts],
        124000, [5 * n for n in sentence_counts], 200)
    experts = set()
    for topic in ("HW", "DP"):
        experts.update(rng.sample([cid for t, cid in ids if t == topic], 125))
    records = []
    for (topic, cid), n_sent, n_tok in zip(ids, sentence_counts, token_counts):
        lengths = split_length(rng, n_tok, n_sent, 5)
        sentences = [make_sentence(rng, topic, L) for L in lengths]
        text = ""
        spans = []
        for s in sentences:
            if text:
                text += " "
            spans.append([len(text), len(text) + len(s)])
            text += s
        records.append({
            "author_kind": "expert" if cid in experts else "crowd",
            "id": cid,
            "sentences": spans,
            "text": text,
            "topic_id": topic,
        })
    assert sum(ntok(r["text"]) for r in records) == 124000
    return records


# --- annotations --------------------------------------------------------------

def phrase_spans(ca, sentence_index):
    """Noun phrases and verb-object phrases inside one sentence."""
    nps = sorted(NOUN_PHRASES[ca["topic_id"]], key=len, reverse=True)
    vps = sorted(VERB_PHRASES, key=len, reverse=True)
    np_re = "(?:%s)" % "|".join(re.escape(n) for n in nps)
    vp_re = "(?:%s)" % "|".join(re.escape(v) for v in vps)
    b, e = ca["sentences"][sentence_index]
    sentence = ca["text"][b:e]
    spans = []
    for pattern in (r"\b%s\b" % np_re, r"\b%s %s\b" % (vp_re, np_re)):
        for m in re.finditer(pattern, sentence, re.IGNORECASE):
            spans.append([b + m.start(), b + m.end()])
    return spans


def extract_chunk(rng, ca, target, avoid=()):
    spans = [s for i in target for s in phrase_spans(ca, i)]
    fresh = [s for s in spans if ca["text"][s[0]:s[1]] not in avoid]
    span = rng.choice(fresh or spans)
    return ca["text"][span[0]:span[1]], span


def weighted_distinct(rng, k, exclude=()):
    labels = [l for l in LABEL_WEIGHTS if l not in exclude]
    chosen = []
    while len(chosen) < k:
        pick = rng.choices(labels, weights=[LABEL_WEIGHTS[l] for l in labels])[0]
        if pick not in chosen:
            chosen.append(pick)
    return chosen


def kappa(pairs_by_annotator):
    n = len(pairs_by_annotator)
    agree = sum(a == b for a, b in pairs_by_annotator)
    ca = Counter(a for a, _ in pairs_by_annotator)
    cb = Counter(b for _, b in pairs_by_annotator)
    chance = sum(ca[k] * cb[k] for k in ca)
    return (agree * n - chance) / (n * n - chance)


def majority(votes):
    counts = Counter(votes)
    best = max(counts.values())
    return min(s for s, c in counts.items() if c == best)


def ordinal_alpha(pattern_counts):
    """Coincidence-matrix ordinal alpha for items rated by 5 workers."""
    o = defaultdict(float)
    for pattern, count in pattern_counts.items():
        if count == 0:
            continue
        c = Counter(pattern)
        for a in c:
            for b in c:
                pairs = c[a] * (c[a] - 1) if a == b else c[a] * c[b]
                o[(a, b)] += count * pairs / 4.0
    values = [1, 2, 3]
    n_c = {v: sum(o[(v, k)] for k in values) for v in values}
    n = sum(n_c.values())

    def delta(a, b):
        lo, hi = min(a, b), max(a, b)
        s = sum(n_c[g] for g in values if lo <= g <= hi) - (n_c[lo] + n_c[hi]) / 2.0
        return s * s

    d_o = sum(o[(a, b)] * delta(a, b) for a in values for b in values)
    d_e = sum(n_c[a] * n_c[b] * delta(a, b) for a in values for b in values)
    return 1.0 - (n - 1) * d_o / d_e


def design_votes(rng, items, score3, target_alpha):
    patterns = list(itertools.combinations_with_replacement([1, 2, 3], 5))
    by_class = defaultdict(list)
    for p in patterns:
        by_class[majority(p)].append(p)
    rest = items - score3
    counts = Counter()
    # Latent start: good templates mostly get 3s.
    for _ in range(score3):
        counts[rng.choice(by_class[3])] += 1
    for _ in range(rest):
        cls = 2 if rng.random() < 0.62 else 1
        counts[rng.choice(by_class[cls])] += 1
    current = ordinal_alpha(counts)
    for _ in range(200000):
        if abs(current - target_alpha) < 2e-4:
            break
        src = rng.choice([p for p in counts if counts[p] > 0])
        dst = rng.choice(by_class[majority(src)])
        if dst == src:
            continue
        counts[src] -= 1
        counts[dst] += 1
        proposal = ordinal_alpha(counts)
        if abs(proposal - target_alpha) < abs(current - target_alpha):
            current = proposal
        else:
            counts[src] += 1
            counts[dst] -= 1
    assert abs(current - target_alpha) < 2e-4, current
    plan = []
    for p, c in sorted(counts.items()):
        plan += [p] * c
    rng.shuffle(plan)
    return plan, current


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    parser.add_argument("--out", default=os.path.join(root, "data", "release_fixture"))
    parser.add_argument("--templates", default=os.path.join(root, "data", "templates", "typic_templates.json"))
    parser.add_argument("--seed", type=int, default=20221)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    version, templates, template_order = load_templates(args.templates)

    all_vocab = " ".join(sum(NOUN_PHRASES.values(), []) + VERB_PHRASES + OPENERS + ADVERBIALS).lower().split()
    for phrase in NOVEL_PHRASES:
        assert not any(w in all_vocab for w in phrase.split() if len(w) > 3), phrase

    cas = make_counterarguments(rng)
    ca_by_id = {c["id"]: c for c in cas}

    # Annotated counterarguments: 99 on homework, 98 on the death penalty.
    annotated = rng.sample([c["id"] for c in cas if c["topic_id"] == "HW"], 99) + \
        rng.sample([c["id"] for c in cas if c["topic_id"] == "DP"], 98)
    annotated.sort()
    assessors = {cid: rng.sample(["A1", "A2", "A3", "A4"], 2) for cid in annotated}

    # Target groups with their number of distinct templates.
    ks = [1] * 542 + [2] * 144 + [3] * 52 + [4] * 19 + [5] * 5
    rng.shuffle(ks)
    groups = [{"k": k, "dup": 0} for k in ks]
    for g in rng.sample(range(len(groups)), 3):
        groups[g]["dup"] = 1
    for g in groups:
        g["labels"] = weighted_distinct(rng, g["k"])
        if g["dup"]:
            g["labels"].append(rng.choice(g["labels"]))
    # Place groups: every annotated argument gets one, the rest at random.
    owners = list(annotated) + [rng.choice(annotated) for _ in range(len(groups) - len(annotated))]
    rng.shuffle(owners)
    used_targets = defaultdict(set)

    def fresh_target(cid):
        n = len(ca_by_id[cid]["sentences"])
        options = [(i, j) for i in range(n) for j in range(i, min(n, i + 3))]
        options = [o for o in options if o not in used_targets[cid]]
        i, j = rng.choice(options)
        used_targets[cid].add((i, j))
        return list(range(i, j + 1))

    for g, cid in zip(groups, owners):
        g["ca"] = cid
        g["target"] = fresh_target(cid)

    # Comments: 72 comments carry two templates, the rest one.
    multi_groups = rng.sample([i for i, g in enumerate(groups) if g["k"] >= 2], 72)
    comments = []  # dicts with ca, target, labels
    for i, g in enumerate(groups):
        labels = list(g["labels"])
        if i in multi_groups:
            comments.append({"ca": g["ca"], "target": g["target"], "labels": labels[:2]})
            labels = labels[2:]
        for label in labels:
            comments.append({"ca": g["ca"], "target": g["target"], "labels": [label]})
    for _ in range(64):
        cid = rng.choice(annotated)
        comments.append({"ca": cid, "target": fresh_target(cid), "labels": ["NotApplicable"]})
    assert len(comments) == 1082
    rng.shuffle(comments)
    comments.sort(key=lambda c: c["ca"])  # stable: keeps shuffled order within an argument

    for n, c in enumerate(comments):
        c["id"] = "C%04d" % (n + 1)
        c["annotator"] = rng.choice(assessors[c["ca"]])
        c["template_annotator"] = rng.choice(["T1", "T2"])

    # Split: all two-template comments but ten go to dev.
    multi = [c for c in comments if len(c["labels"]) == 2]
    single = [c for c in comments if len(c["labels"]) == 1 and c["labels"][0] != "NotApplicable"]
    multi_dev = set(id(c) for c in rng.sample(multi, 62))
    single_dev = set(id(c) for c in rng.sample(single, 209))
    for c in comments:
        c["split"] = "dev" if id(c) in multi_dev or id(c) in single_dev else "eval"
    assert sum(c["split"] == "dev" for c in comments) == 271

    # Main diagnoses with fillers.
    diag_counter = [0]

    def next_diag_id(prefix):
        diag_counter[0] += 1
        return "%s%05d" % (prefix, diag_counter[0])

    for c in comments:
        ca = ca_by_id[c["ca"]]
        c["diagnoses"] = []
        for label in c["labels"]:
            d = {"id": next_diag_id("D"), "comment_id": c["id"],
                 "annotator_id": c["template_annotator"], "label": label, "fillers": {}}
            if label != "NotApplicable":
                for slot in templates[label]["slots"]:
                    taken = [f["text"] for f in d["fillers"].values()]
                    text, span = extract_chunk(rng, ca, c["target"], taken)
                    d["fillers"][slot] = {"text": text, "span": span}
            c["diagnoses"].append(d)
        fill = {}
        for d in c["diagnoses"]:
            for slot, f in d["fillers"].items():
                fill.setdefault(slot, f["text"])
        if c["labels"][0] == "NotApplicable":
            c["text"] = rng.choice(NOT_APPLICABLE_COMMENTS)
        else:
            parts = []
            for d in c["diagnoses"]:
                values = {s: f["text"] for s, f in d["fillers"].items()}
                parts.append(COMMENT_PATTERNS[d["label"]].format(**values))
            c["text"] = " ".join(parts)

    main_diagnoses = [d for c in comments for d in c["diagnoses"]]
    assert len(main_diagnoses) == 1154
    eval_diagnoses = [d for c in comments if c["split"] == "eval" for d in c["diagnoses"]]
    assert len(eval_diagnoses) == 821
    assert sum(d["label"] != "NotApplicable" for d in eval_diagnoses) == 757

    # Extractability sample of exactly 166 fillers.
    candidates = [d for d in main_diagnoses if d["label"] != "NotApplicable"]
    rng.shuffle(candidates)
    sample, total = [], 0
    for d in candidates:
        if total + len(d["fillers"]) <= 166:
            sample.append(d)
            total += len(d["fillers"])
        if total == 166:
            break
    assert total == 166
    slots = [(d, s) for d in sample for s in sorted(d["fillers"])]
    classes = ["Extractable"] * 126 + ["ExtractableWithChanges"] * 14 + ["NotExtractable"] * 26
    rng.shuffle(classes)
    for (d, s), cls in zip(slots, classes):
        f = d["fillers"][s]
        f["extractability"] = cls
        if cls == "ExtractableWithChanges":
            ca = ca_by_id[next(c["ca"] for c in comments if c["id"] == d["comment_id"])]
            other, _ = extract_chunk(rng, ca, list(range(len(ca["sentences"]))), [f["text"]])
            f["text"] = f["text"] + " due to " + other
        elif cls == "NotExtractable":
            f["text"] = rng.choice(NOVEL_PHRASES)

    # Double annotation of 74 single-diagnosis eval comments.
    pool = [c for c in comments if c["split"] == "eval" and len(c["diagnoses"]) == 1]
    overlap = rng.sample(pool, 74)
    label_pool = list(LABEL_WEIGHTS) + ["NotApplicable"]
    weights = [LABEL_WEIGHTS[l] for l in LABEL_WEIGHTS] + [4]
    for attempt in range(200000):
        order = list(range(74))
        rng.shuffle(order)
        agree, slot_sum = set(), 0
        for i in order:
            label = overlap[i]["labels"][0]
            if label == "NotApplicable":
                if rng.random() < 0.3:
                    agree.add(i)
                continue
            arity = len(templates[label]["slots"])
            if slot_sum + arity <= 73 and rng.random() < 0.9:
                agree.add(i)
                slot_sum += arity
        if slot_sum != 73:
            continue
        second = []
        for i, c in enumerate(overlap):
            label = c["labels"][0]
            if i in agree:
                second.append(label)
            else:
                while True:
                    other = rng.choices(label_pool, weights=weights)[0]
                    if other != label:
                        break
                second.append(other)
        by_annotator = []
        for c, s in zip(overlap, second):
            first = c["labels"][0]
            by_annotator.append((first, s) if c["template_annotator"] == "T1" else (s, first))
        k = kappa(by_annotator)
        if abs(k - 0.517) < 4e-4:
            break
    else:
        raise SystemExit("kappa design failed")
    print("overlap kappa %.6f with %d agreeing items" % (k, len(agree)))

    overlap_records, adjudication = [], []
    mismatch_slots = set(rng.sample(
        [(i, s) for i in sorted(agree) if overlap[i]["labels"][0] != "NotApplicable"
         for s in templates[overlap[i]["labels"][0]]["slots"]], 8))
    for i, c in enumerate(overlap):
        ca = ca_by_id[c["ca"]]
        other = "T2" if c["template_annotator"] == "T1" else "T1"
        label = second[i]
        d = {"id": "O%05d" % (i + 1), "comment_id": c["id"], "annotator_id": other, "label": label}
        if label != "NotApplicable":
            fillers = {}
            for slot in templates[label]["slots"]:
                if i in agree and (i, slot) not in mismatch_slots:
                    fillers[slot] = {"text": c["diagnoses"][0]["fillers"][slot]["text"]}
                else:
                    text, _ = extract_chunk(rng, ca, list(range(len(ca["sentences"]))))
                    fillers[slot] = {"text": text}
                if i in agree:
                    same = (i, slot) not in mismatch_slots
                    adjudication.append({
                        "item": "%s#0/%s" % (c["id"], slot),
                        "ratings": {c["template_annotator"]: "m%d%s" % (i, slot),
                                    other: "m%d%s" % (i, slot) if same else "m%d%s-alt" % (i, slot)},
                    })
            d["fillers"] = fillers
        overlap_records.append(d)
    assert len(adjudication) == 73
    assert sum(len(set(a["ratings"].values())) == 1 for a in adjudication) == 65

    # Informativeness votes for every templated diagnosis.
    judged = [d for d in main_diagnoses if d["label"] != "NotApplicable"]
    assert len(judged) == 1090
    plan, alpha = design_votes(rng, len(judged), 857, 0.265)
    print("informativeness ordinal alpha %.6f" % alpha)
    workers = ["W%03d" % (i + 1) for i in range(120)]
    judgments = []
    for d, pattern in zip(judged, plan):
        votes = list(pattern)
        rng.shuffle(votes)
        for worker, score in zip(sorted(rng.sample(workers, 5)), votes):
            judgments.append({"comment_id": d["comment_id"], "diagnosis_id": d["id"],
                              "score": score, "worker_id": worker})

    # --- write -------------------------------------------------------------
    os.makedirs(args.out, exist_ok=True)
    write_jsonl(os.path.join(args.out, "topics.jsonl"), [
        {"id": t["id"], "motion": t["motion"],
         "points": [{"id": pid, "text": text} for pid, text in t["points"]]}
        for t in TOPICS])
    write_jsonl(os.path.join(args.out, "counterarguments.jsonl"), cas)
    write_jsonl(os.path.join(args.out, "comments.jsonl"), [
        {"annotator_id": c["annotator"], "counterargument_id": c["ca"], "id": c["id"],
         "target": c["target"], "text": c["text"]} for c in comments])

    def diagnosis_record(d):
        record = {"annotator_id": d["annotator_id"], "comment_id": d["comment_id"],
                  "id": d["id"], "label": d["label"]}
        if d.get("fillers"):
            fillers = {}
            for slot, f in d["fillers"].items():
                out = {"text": f["text"]}
                if f.get("extractability"):
                    out["extractability"] = f["extractability"]
                    if f["extractability"] == "Extractable":
                        out["source"] = {"document": "counterargument", "span": f["span"]}
                fillers[slot] = out
            record["fillers"] = fillers
        return record

    write_jsonl(os.path.join(args.out, "templated.jsonl"), [diagnosis_record(d) for d in main_diagnoses])
    write_jsonl(os.path.join(args.out, "templated_overlap.jsonl"), [diagnosis_record(d) for d in overlap_records])
    write_jsonl(os.path.join(args.out, "judgments.jsonl"), judgments)
    write_jsonl(os.path.join(args.out, "slot_adjudication.jsonl"), adjudication)
    write_pretty(os.path.join(args.out, "split.json"), {
        "dev": [c["id"] for c in comments if c["split"] == "dev"],
        "eval": [c["id"] for c in comments if c["split"] == "eval"],
    })
    write_pretty(os.path.join(args.out, "manifest.json"), {
        "files": {
            "comments": "comments.jsonl",
            "counterarguments": "counterarguments.jsonl",
            "judgments": "judgments.jsonl",
            "slot_adjudication": "slot_adjudication.jsonl",
            "split": "split.json",
            "templated": "templated.jsonl",
            "templated_overlap": "templated_overlap.jsonl",
            "topics": "topics.jsonl",
        },
        "name": "typic-release-fixture",
        "template_set": "../templates/typic_templates.json",
        "template_set_version": version,
        "tokenizer": "unicode-word",
    })


if __name__ == "__main__":
    main()
