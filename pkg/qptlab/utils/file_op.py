from pathlib import Path


def write_text_lf(file_path: str | Path, content: str) -> Path:
    """以 UTF-8、LF 换行写出文本, 自动创建父目录"""
    path = Path(file_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(content)
    return path


def read_text(file_path: str | Path) -> str:
    with open(Path(file_path), "r", encoding="utf-8") as f:
        return f.read()
