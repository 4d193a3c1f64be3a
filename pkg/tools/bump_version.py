#! /usr/bin/env python
#
# Bump the version number of the PyEnlarge library in
# pyproject.toml, the package __init__, the CLI version
# option and the version test.

import argparse
import os
import shutil

# repository root
ROOT = os.path.join(os.path.dirname(os.path.realpath(__file__)), "..")


def rewrite_line(relative_filename, marker, replacement):
    # replace every line containing marker, through a .bak copy
    src_filename = os.path.join(ROOT, relative_filename)
    dst_filename = "%s.bak" % (src_filename)
    print("Updating %s file ..." % (relative_filename))
    try:
        with open(src_filename, "r") as fp_read, open(dst_filename, "w") as fp_write:
            n_replaced = 0
            for line in fp_read:
                if (marker in line):
                    fp_write.write(replacement)
                    n_replaced += 1
                else:
                    fp_write.write(line)
        if (n_replaced == 0):
            print("Warning: no line containing '%s' in %s" % (marker, relative_filename))
        shutil.copyfile(dst_filename, src_filename)
        os.remove(dst_filename)
    except IOError as e:
        print("Error: %s" % (str(e)))
        return False
    return True


def main():
    # args
    parser = argparse.ArgumentParser(description="Bump the version number of the PyEnlarge library")
    parser.add_argument("version", type=str, help="Version number to bump to")
    args = parser.parse_args()

    # bump pyproject.toml
    print("Updating pyproject.toml file ...")
    os.system("poetry version %s" % (args.version))
    print()

    # bump the other files
    targets = [
        ("tests/test_suite/test_version.py", "assert __version__", "    assert __version__ == \"%s\"\n" % (args.version)),
        ("pyenlarge/__init__.py", "__version__ = ", "__version__ = \"%s\"\n" % (args.version)),
        ("pyenlarge/cli/cli.py", "@click.version_option", "@click.version_option(version=\"%s\")\n" % (args.version)),
    ]
    for relative_filename, marker, replacement in targets:
        if (rewrite_line(relative_filename, marker, replacement) is False):
            return 1
        print()

    # end
    print("Successfully bumped version!")
    return 0


# -----------------
if (__name__ == "__main__"):
    main()
