// Browser entry point.

import { initWorkspace } from "./app.js";

document.addEventListener("DOMContentLoaded", () => {
  initWorkspace(document);
});
