"""
Bumps the irlfrac version in irlfrac/__init__.py and pyproject.toml, commits both files and tags the commit.

Usage: python update_version.py <major.minor.patch>
"""
import re
import subprocess
import sys
from pathlib import Path

# Files carrying the version, with the pattern matching it in each
VERSION_FILES = {
    Path("irlfrac/__init__.py"): r'(?<=\b__version__ = ")[^"]+',
    Path("pyproject.toml"): r'(?<=^version = ")[^"]+',
}
SEMVER = re.compile(r"^\d+\.\d+\.\d+$")

def read_version(path, pattern):
    """Returns the version string found in `path`."""
    match = re.search(pattern, path.read_text(), flags=re.MULTILINE)
    if not match:
        raise ValueError(f"Version pattern not found in {path}")
    return match.group(0)

def write_version(path, pattern, version):
    """Rewrites the version string in `path`."""
    path.write_text(re.sub(pattern, version, path.read_text(), count=1, flags=re.MULTILINE))

def main(argv = None):
    argv = sys.argv[1:] if argv is None else argv
    if len(argv) != 1 or not SEMVER.match(argv[0]):
        print("Usage: python update_version.py <major.minor.patch>")
        return 1
    version = argv[0]
    try:
        changed = []
        for path, pattern in VERSION_FILES.items():
            current = read_version(path, pattern)
            print(f"{path}: {current}")
            if current != version:
                write_version(path, pattern, version)
                changed.append(str(path))
        if changed:
            subprocess.run(["git", "add", *changed], check=True)
            subprocess.run(["git", "commit", "-m", f"Bump version to {version}"], check=True)
        subprocess.run(["git", "tag", version], check=True)
        print(f"Tagged {version}.")
    except Exception as e:
        print(f"Error: {e}")
        return 1
    return 0

if __name__ == "__main__":
    sys.exit(main())
