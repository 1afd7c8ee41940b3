import json
import logging
import os

log = logging.getLogger(__name__)

BASE_DIR = os.path.dirname(os.path.abspath(__file__))
DATA_DIR = os.path.join(BASE_DIR, "data")
CORPUS_PATH = os.path.join(DATA_DIR, "audit_corpus.json")

# Family specs audited when `audit` gets no arguments. Ranges expand.
DEFAULT_CORPUS: list[str] = [
    "path:2..6",
    "cycle:3..12",
    "complete:3..8",
    "cycle_union_vertex:3..6,3..6",
    "conjoined:p=1,cycles=3+3+3",
    "conjoined:p=1,cycles=4+4+4",
    "conjoined:p=2,cycles=5+5+5",
    "conjoined:p=1,cycles=5+4",
    "conjoined:p=1,cycles=5+4+4",
    "conjoined:p=1,cycles=5+5+4",
    "conjoined:p=1,cycles=5+5+5+4",
    "conjoined:p=1,cycles=5+5+4+4+4",
    "entwined:odd-chains,n=2..5",
    "entwined:cycles=3+4+3,shared=1+1",
    "entwined:cycles=5+4+5,shared=1+1",
    "entwined:cycles=3+6+5+4,shared=1+2+1",
    "floral:k=5,petals=(0,1,3)+(2,1,3),mode=detached",
    "floral:k=5,petals=(0,1,3)+(1,1,3)+(2,1,3),mode=detached",
    "floral:k=5,petals=(0,1,3)+(1,1,3)+(2,1,3),mode=attached",
    "floral:k=4,petals=(0,1,3)+(2,1,3),mode=detached",
    "floral:k=6,petals=(0,1,3)+(1,1,3),mode=attached",
    "floral:k=5,petals=(0,1,4)+(2,1,4),mode=detached",
    "floral:k=3,petals=(0,1,4)+(1,1,4)+(2,1,4),mode=detached",
]


def _ensure_corpus_file_exists(path: str) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    if not os.path.exists(path):
        with open(path, "w", encoding="utf-8") as f:
            json.dump({"specs": DEFAULT_CORPUS}, f, ensure_ascii=False, indent=2)


def load_corpus(path: str | None = None) -> list[str]:
    """
    Spec strings from the corpus file ({"specs": [...]}). The bundled file is
    created on first use; an unreadable or malformed file falls back to the
    built-in list.
    """
    path = path or CORPUS_PATH
    if path == CORPUS_PATH:
        _ensure_corpus_file_exists(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        log.warning("corpus %s unreadable (%s), using the built-in corpus", path, e)
        return list(DEFAULT_CORPUS)

    specs = data.get("specs") if isinstance(data, dict) else None
    if not isinstance(specs, list) or not all(isinstance(s, str) for s in specs):
        log.warning("corpus %s has no 'specs' list of strings, using the built-in corpus", path)
        return list(DEFAULT_CORPUS)
    return [s for s in specs if s.strip()]
