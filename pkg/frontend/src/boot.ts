import { initDashboard } from "./main.js";

const root = document.getElementById("app");
if (root) initDashboard(root);
