"""Textual file formats: map files, group files, witness files.

Map files hold named blocks, one map each::

    map r1
    circle L=5
    bp 0:0
    bp 1:1

    map a
    line
    tails 1 1

Line blocks end with a ``tails`` line even when derivable, so the round
trip is byte exact.  Group files name an ordered generating set and point
at a map file; witness files carry derived-generator definitions, edge
witness words, and class declarations for the graph criterion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .intervals import Rat, format_rat, parse_rat
from .plmaps import PLMap, PLMapCircle, PLMapLine
from .words import GenAssignment, Word, parse_word


def render_map_block(name: str, m: PLMap) -> str:
    lines = [f"map {name}"]
    if isinstance(m, PLMapCircle):
        lines.append(f"circle L={format_rat(m.modulus)}")
        for x, y in m.breakpoints:
            lines.append(f"bp {format_rat(x)}:{format_rat(y)}")
    else:
        lines.append("line")
        for x, y in m.breakpoints:
            lines.append(f"bp {format_rat(x)}:{format_rat(y)}")
        lines.append(f"tails {format_rat(m.left_offset)} {format_rat(m.right_offset)}")
    return "\n".join(lines) + "\n"


def render_maps(named: dict[str, PLMap]) -> str:
    return "\n".join(render_map_block(n, m) for n, m in named.items())


def parse_maps(text: str) -> dict[str, PLMap]:
    blocks: list[list[str]] = []
    cur: list[str] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            if cur:
                blocks.append(cur)
                cur = []
            continue
        cur.append(line)
    if cur:
        blocks.append(cur)

    out: dict[str, PLMap] = {}
    for block in blocks:
        head = block[0].split()
        if len(head) != 2 or head[0] != "map":
            raise ValueError(f"expected 'map <name>', got {block[0]!r}")
        name = head[1]
        if name in out:
            raise ValueError(f"duplicate map name {name!r}")
        kind_line = block[1] if len(block) > 1 else ""
        bps = []
        tails = None
        for line in block[2:]:
            if line.startswith("bp "):
                xs, ys = line[3:].split(":")
                bps.append((parse_rat(xs), parse_rat(ys)))
            elif line.startswith("tails "):
                parts = line.split()
                tails = (parse_rat(parts[1]), parse_rat(parts[2]))
            else:
                raise ValueError(f"bad map line {line!r}")
        if kind_line == "line":
            if tails is None and not bps:
                raise ValueError(f"map {name}: pure translations need a tails line")
            tl, tr = tails if tails else (None, None)
            out[name] = PLMapLine.make(bps, tl, tr)
        elif kind_line.startswith("circle L="):
            L = parse_rat(kind_line[len("circle L="):])
            out[name] = PLMapCircle.make(L, bps)
        else:
            raise ValueError(f"map {name}: bad kind line {kind_line!r}")
    return out


def write_maps_file(path: Path, named: dict[str, PLMap]) -> None:
    Path(path).write_text(render_maps(named))


def read_maps_file(path: Path) -> dict[str, PLMap]:
    return parse_maps(Path(path).read_text())


# --------------------------------------------------------------------------
# group files

@dataclass
class GroupFile:
    kind: str                      # chain | ring | set
    maps_path: str
    gen_names: tuple[str, ...]
    maps: dict[str, PLMap]

    def assignment(self) -> GenAssignment:
        return GenAssignment({n: self.maps[n] for n in self.gen_names})


def render_group(kind: str, gen_names, maps_filename: str,
                 modulus: Rat | None = None) -> str:
    lines = [f"group {kind}"]
    if modulus is not None:
        lines.append(f"modulus {format_rat(modulus)}")
    lines.append(f"maps {maps_filename}")
    lines.extend(f"gen {n}" for n in gen_names)
    return "\n".join(lines) + "\n"


def read_group_file(path: Path) -> GroupFile:
    path = Path(path)
    kind = None
    maps_rel = None
    modulus = None
    gens: list[str] = []
    for raw in path.read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "group":
            kind = rest
        elif key == "maps":
            maps_rel = rest
        elif key == "modulus":
            modulus = parse_rat(rest)
        elif key == "gen":
            gens.append(rest)
        else:
            raise ValueError(f"bad group line {line!r}")
    if kind not in ("chain", "ring", "set"):
        raise ValueError(f"bad group kind {kind!r}")
    if maps_rel is None or not gens:
        raise ValueError("group file needs a maps line and gen lines")
    maps = read_maps_file(path.parent / maps_rel)
    missing = [g for g in gens if g not in maps]
    if missing:
        raise ValueError(f"generators {missing} not in the map file")
    if modulus is not None:
        for g in gens:
            if not isinstance(maps[g], PLMapCircle) or maps[g].modulus != modulus:
                raise ValueError(f"generator {g} does not live on the "
                                 f"declared circle of circumference {modulus}")
    return GroupFile(kind, maps_rel, tuple(gens), maps)


# --------------------------------------------------------------------------
# witness files

@dataclass
class WitnessData:
    defs: dict[str, Word] = field(default_factory=dict)
    edges: dict[frozenset, Word] = field(default_factory=dict)
    classes: list[tuple[str, tuple[str, ...], tuple[Word, ...]]] = field(default_factory=list)
    dense: dict[str, tuple[str, ...]] = field(default_factory=dict)


def parse_witness_file(text: str) -> WitnessData:
    data = WitnessData()
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        if key == "def":
            name, _, word_text = rest.partition(" ")
            data.defs[name] = parse_word(word_text)
        elif key == "edge":
            parts = rest.split(None, 2)
            if len(parts) != 3:
                raise ValueError(f"bad edge line {line!r}")
            data.edges[frozenset((parts[0], parts[1]))] = parse_word(parts[2])
        elif key == "class":
            head, _, via = rest.partition(" via ")
            cname, _, members_text = head.partition(":")
            members = tuple(members_text.split())
            words = tuple(parse_word(w) for w in via.split(";")) if via.strip() else ()
            data.classes.append((cname.strip(), members, words))
        elif key == "dense":
            cname, _, members_text = rest.partition(":")
            data.dense[cname.strip()] = tuple(members_text.split())
        else:
            raise ValueError(f"bad witness line {line!r}")
    return data


def render_witness_file(data: WitnessData) -> str:
    lines = []
    if data.defs:
        lines.append("# derived generators")
        lines.extend(f"def {n} {w}" for n, w in data.defs.items())
    if data.edges:
        lines.append("# edge witness words")
        for key in sorted(data.edges, key=lambda k: sorted(k)):
            a, b = sorted(key)
            lines.append(f"edge {a} {b} {data.edges[key]}")
    if data.classes:
        lines.append("# conjugacy classes")
        for cname, members, words in data.classes:
            via = " via " + "; ".join(str(w) for w in words) if words else ""
            lines.append(f"class {cname}: {' '.join(members)}{via}")
        for cname, members, _ in data.classes:
            if cname in data.dense:
                lines.append(f"dense {cname}: {' '.join(data.dense[cname])}")
    return "\n".join(lines) + "\n"
