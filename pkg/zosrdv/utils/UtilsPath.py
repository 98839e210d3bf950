#
# Copyright (c) The zosrdv developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy of
# this software and associated documentation files (the "Software"), to deal in
# the Software without restriction, including without limitation the rights to
# use, copy, modify, merge, publish, distribute, sublicense, and/or sell copies of
# the Software, and to permit persons to whom the Software is furnished to do so,
# subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY, FITNESS
# FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR
# COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER
# IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN
# CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
#

__authors__ = ["zosrdv developers"]
__license__ = "MIT"
__date__ = "18/10/2026"

import os
import pathlib
import tempfile

from zosrdv.utils import UtilsLogging

logger = UtilsLogging.getLogger()


def getWorkingDirectory(task, inData, workingDirectorySuffix=None):
    parentDirectory = inData.get("workingDirectory", None)
    if parentDirectory is None:
        parentDirectory = os.getcwd()
    parentDirectory = pathlib.Path(parentDirectory)
    if not parentDirectory.exists():
        parentDirectory.mkdir(mode=0o755, parents=True)
    if workingDirectorySuffix is None:
        # Create unique directory
        workingDirectory = tempfile.mkdtemp(
            prefix=task.__class__.__name__ + "_", dir=parentDirectory
        )
        os.chmod(workingDirectory, 0o755)
        workingDirectory = pathlib.Path(workingDirectory)
    else:
        # No locking: concurrent tasks must use distinct suffixes
        workingDirectoryName = task.__class__.__name__ + "_" + str(workingDirectorySuffix)
        workingDirectory = parentDirectory / workingDirectoryName
        index = 1
        while workingDirectory.exists():
            workingDirectory = parentDirectory / "{0}_{1:02d}".format(workingDirectoryName, index)
            index += 1
        workingDirectory.mkdir(mode=0o775, parents=True, exist_ok=False)
    logger.debug("Working directory: %s", workingDirectory)
    return workingDirectory


def writeText(filePath, text):
    """Writes through a temporary file and a rename."""
    filePath = pathlib.Path(filePath)
    if not filePath.parent.exists():
        filePath.parent.mkdir(mode=0o755, parents=True)
    tmpPath = filePath.with_name(filePath.name + ".tmp")
    with open(str(tmpPath), "w") as f:
        f.write(text)
    os.replace(str(tmpPath), str(filePath))
    return filePath
