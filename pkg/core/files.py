import hashlib
import json
import os
import tempfile
from pathlib import Path


def atomic_write_text(path, text: str) -> Path:
    """Атомарная запись: временный файл в том же каталоге и os.replace"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    return path


def canonical_json(data) -> str:
    """JSON с сортировкой ключей, чтобы одинаковые данные давали одинаковые байты"""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def stable_seed(*parts) -> int:
    """Детерминированный 63-битный seed из произвольных частей (не зависит от PYTHONHASHSEED)"""
    digest = hashlib.blake2b(repr(parts).encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big") >> 1


def file_digest(*chunks) -> str:
    hasher = hashlib.sha256()
    for chunk in chunks:
        hasher.update(chunk if isinstance(chunk, bytes) else str(chunk).encode("utf-8"))
    return hasher.hexdigest()
