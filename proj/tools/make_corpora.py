#!/usr/bin/env python3
"""Writes the hand-built CoNLL-U corpora used by the tests and examples.

    python3 tools/make_corpora.py

Regenerates data/mini_corpus.conllu and tests/data/antonym.conllu. The
output is deterministic.
"""

import pathlib
import random

ROOT = pathlib.Path(__file__).resolve().parent.parent

DETERMINERS = {"the", "a", "an", "its", "his", "her", "their", "this", "that"}
PRONOUNS = {"it", "they", "he", "she", "we", "them", "him", "her", "us"}


class Sentence:
    def __init__(self, sid):
        self.sid = sid
        self.tokens = []  # [form, lemma, upos, head, deprel]

    def add(self, form, lemma, upos, head=0, deprel="dep"):
        self.tokens.append([form, lemma, upos, head, deprel])
        return len(self.tokens)

    def attach(self, index, head, deprel):
        self.tokens[index - 1][3] = head
        self.tokens[index - 1][4] = deprel

    def render(self):
        text = " ".join(t[0] for t in self.tokens)
        lines = [f"# sent_id = {self.sid}", f"# text = {text}"]
        for i, (form, lemma, upos, head, deprel) in enumerate(self.tokens, 1):
            lines.append(f"{i}\t{form}\t{lemma}\t{upos}\t_\t_\t{head}\t{deprel}\t_\t_")
        return "\n".join(lines) + "\n\n"


def word(spec):
    form, _, lemma = spec.partition("/")
    return form, lemma or form.lower()


def noun_phrase(s, spec):
    """Adds a noun phrase and returns the index of its head.

    Prefixes: '+' compound, '=' flat, '~' amod, '#' nummod, '!' advmod of
    the following number. Determiners are recognized by form. The last
    plain word is the head; ' of ' introduces an nmod complement.
    """
    head_part, _, complement = spec.partition(" of ")
    words = head_part.split()
    deps = []
    head = None
    pending_adv = None
    for w in words:
        marker = w[0] if w[0] in "+=~#!" else ""
        form, lemma = word(w[len(marker):])
        if marker == "!":
            pending_adv = s.add(form, lemma, "ADV")
            continue
        if marker == "#":
            idx = s.add(form, lemma, "NUM")
            deps.append((idx, "nummod"))
            if pending_adv:
                s.attach(pending_adv, idx, "advmod")
                pending_adv = None
            continue
        if not marker and form.lower() in DETERMINERS:
            deps.append((s.add(form, lemma, "DET"), "det"))
            continue
        upos = "PROPN" if form[0].isupper() else "NOUN"
        if form.lower() in PRONOUNS:
            upos = "PRON"
        if marker == "~":
            upos = "ADJ"
        idx = s.add(form, lemma, upos)
        if marker == "=" and head is not None:
            s.attach(idx, head, "flat")
        elif marker:
            deps.append((idx, {"+": "compound", "~": "amod", "=": "flat"}[marker]))
        else:
            head = idx
    assert head is not None, spec
    for idx, rel in deps:
        s.attach(idx, head, rel)
    if complement:
        case = s.add("of", "of", "ADP")
        comp = noun_phrase(s, complement)
        s.attach(case, comp, "case")
        s.attach(comp, head, "nmod")
    return head


def clause(s, subj, verb, obj=None, pps=(), advs=(), passive=False, agent=None, front_pps=()):
    """Adds 'subj [aux] verb obj pps' and returns the verb index."""
    pending = []
    for prep, np in front_pps:
        case = s.add(prep, prep, "ADP")
        n = noun_phrase(s, np)
        s.attach(case, n, "case")
        pending.append((n, "obl"))
    subj_head = noun_phrase(s, subj)
    aux_specs, _, main = verb.rpartition(" ")
    aux_idx = []
    for a in aux_specs.split():
        form, lemma = word(a)
        aux_idx.append(s.add(form, lemma, "AUX"))
    form, lemma = word(main)
    v = s.add(form, lemma, "VERB")
    s.attach(subj_head, v, "nsubj:pass" if passive else "nsubj")
    for i, a in enumerate(aux_idx):
        s.attach(a, v, "aux:pass" if passive and i == len(aux_idx) - 1 else "aux")
    for n, rel in pending:
        s.attach(n, v, rel)
    if obj:
        s.attach(noun_phrase(s, obj), v, "obj")
    if agent:
        case = s.add("by", "by", "ADP")
        n = noun_phrase(s, agent)
        s.attach(case, n, "case")
        s.attach(n, v, "obl:agent")
    for prep, np in pps:
        case = s.add(prep, prep, "ADP")
        n = noun_phrase(s, np)
        s.attach(case, n, "case")
        s.attach(n, v, "obl")
    for adv in advs:
        form, lemma = word(adv)
        s.attach(s.add(form, lemma, "ADV"), v, "advmod")
    return v


def sentence(sid, *args, **kwargs):
    s = Sentence(sid)
    v = clause(s, *args, **kwargs)
    s.attach(v, 0, "root")
    s.add(".", ".", "PUNCT", v, "punct")
    return s


def mini_corpus():
    out = []
    n = iter(range(1, 10000))

    def add(*args, **kwargs):
        out.append(sentence(f"mini-{next(n):03d}", *args, **kwargs))

    # buy / purchase, consistent contexts
    add("Campbell", "is/be buying/buy", "Erasco", [("from", "+Grand Metropolitan"), ("for", "!about/about #210 million")])
    add("Campbell", "is/be purchasing/purchase", "Erasco",
        [("from", "+Grand Metropolitan"), ("for", "!approximately/approximately #210 million")])
    add("Erasco", "was/be bought/buy", None, [("from", "+Grand Metropolitan")], passive=True, agent="Campbell")
    add("the Hoffmann +holding/holding", "bought/buy", "a ~majority stake of Lindner",
        [("in", "March")])
    add("the Hoffmann +holding/holding", "purchased/purchase", "a ~majority stake of Lindner",
        [("for", "#45 million")])

    # buy / sell, same participants but contradicting dates
    add("Acme", "bought/buy", "+Widgetco shares/share", [("on", "Monday")])
    add("Acme", "sold/sell", "+Widgetco shares/share", [("on", "Tuesday")])
    add("the ~pension fund", "sold/sell", "its +Widgetco shares/share", [("on", "Friday")], advs=["quietly/quietly"])

    # announce / confirm
    add("Ieng =Sary", "announced/announce", "his split", [("with", "Pol =Pot")], front_pps=[("on", "Wednesday")])
    add("Ieng =Sary", "confirmed/confirm", "his split", [("with", "Pol =Pot")], advs=["publicly/publicly"])

    # open / start
    add("Milan =Kucan", "opened/open", "a ~second round of consultations/consultation",
        [("with", "~political parties/party"), ("on", "Monday")])
    add("Milan =Kucan", "started/start", "a ~second round of consultations/consultation",
        [("with", "~political parties/party")], front_pps=[("on", "Monday")])

    # post / report
    add("Kellogg", "posted/post", "a ~quarterly profit of #50 million",
        [("in", "the ~third quarter")])
    add("Kellogg", "reported/report", "a ~quarterly profit of #50 million", [("on", "Thursday")])
    add("Kellogg", "announced/announce", "a ~quarterly profit of #50 million", [("on", "Thursday")])

    # cut / lower
    add("the Bundesbank", "cut/cut", "its +discount rate", [("to", "#2.5 percent")])
    add("the Bundesbank", "lowered/lower", "its +discount rate", [("to", "#2.5 percent")], advs=["again/again"])

    # separate / split
    add("a ~civil war", "separated/separate", "China", [("from", "Taiwan"), ("in", "1949")])
    add("a ~civil war", "split/split", "China", [("from", "Taiwan"), ("in", "1949")])

    # hire / fire, too little shared context to pass the default threshold
    add("Globex", "hired/hire", "Jones")
    add("Globex", "fired/fire", "Jones")

    # acquire / buy with a pronoun object, dropped from the key index
    add("Initech", "acquired/acquire", "it", [("in", "May")])
    add("Initech", "bought/buy", "it", [("in", "May")])

    # raise / increase
    add("the ~central bank", "raised/raise", "+interest rates/rate", [("by", "#0.5 point")])
    add("the ~central bank", "increased/increase", "+interest rates/rate", [("by", "#0.5 point")],
        advs=["unexpectedly/unexpectedly"])
    add("the ~central bank", "cut/cut", "+interest rates/rate", [("by", "#0.25 point")])

    # background sentences with their own participants
    rng = random.Random(20040101)
    subjects = ["Vandelay", "Soylent", "Hooli", "Umbrella", "Tyrell", "Cyberdyne", "Gringotts", "Wonka",
                "Stark", "Wayne", "Oscorp", "Nakatomi"]
    objects = ["a ~new factory", "~record sales", "the ~annual report", "a +merger proposal/proposal",
               "its ~chief executive", "a +software unit/unit", "the ~quarterly dividend", "~new bonds/bond"]
    verbs = ["announced/announce", "expanded/expand", "reviewed/review", "approved/approve",
             "delayed/delay", "rejected/reject", "planned/plan", "closed/close"]
    preps = [("in", "April"), ("in", "Europe"), ("for", "#12 million"), ("after", "a ~long review"),
             ("on", "Friday"), ("with", "~strong demand")]
    for _ in range(30):
        pps = rng.sample(preps, rng.randint(0, 2))
        add(rng.choice(subjects), rng.choice(verbs), rng.choice(objects), pps)
    return out


def antonym_corpus():
    out = []
    n = iter(range(1, 10000))

    def add(*args, **kwargs):
        out.append(sentence(f"ant-{next(n):02d}", *args, **kwargs))

    days = ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday"]
    firms = ["Acme", "Globex", "Initech", "Hooli", "Soylent"]
    targets = ["+Widgetco shares/share", "+Gizmo bonds/bond", "+Sprocket stock/stock", "the +Dynamo unit/unit",
               "+Zenith notes/note"]
    # buy and sell share every participant but never agree on the date
    for i in range(5):
        add(firms[i], "bought/buy", targets[i], [("on", days[i])])
        add(firms[i], "sold/sell", targets[i], [("on", days[(i + 2) % 5])])
    # buy and purchase agree, but share fewer participants
    add(firms[0], "purchased/purchase", targets[0], [("on", days[0])])
    add("Vandelay", "purchased/purchase", "+Latex gloves/glove", [("on", "Saturday")])
    add("Vandelay", "bought/buy", "+Latex gloves/glove", [("on", "Saturday")])
    add("Tyrell", "purchased/purchase", "+Replicant parts/part", [("in", "June")])
    # background verbs so that filler association is not trivial
    add("Wonka", "reported/report", "~record sales/sale", [("in", "June")])
    add("Stark", "reported/report", "a loss", [("in", "May")])
    add("Wonka", "approved/approve", "a dividend", [("in", "May")])
    add("Stark", "approved/approve", "~new bonds/bond", [("on", "Friday")])
    return out


def write(path, sentences):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(s.render() for s in sentences))


if __name__ == "__main__":
    write(ROOT / "data" / "mini_corpus.conllu", mini_corpus())
    write(ROOT / "tests" / "data" / "antonym.conllu", antonym_corpus())
